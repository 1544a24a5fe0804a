// csv.hpp — sweep record serialization with a frozen header
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qrabi/sweep.hpp"

namespace qrabi {

// Compile-time constant covered by a golden test; column order is frozen.
inline constexpr std::string_view kCsvHeader =
    "delta,g,lambda,phase,parity,x_root,energy,residual,mean_n,var_n,q_excess,"
    "mandel_q,mean_x,dx,dp,product,r,overlap,cov_xp,truncation_n,error";

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

std::string to_csv(const std::vector<SweepRecord>& records);

// Inverse of to_csv; re-serializing the result is byte-identical.
std::vector<SweepRecord> parse_csv(std::string_view text);

}  // namespace qrabi
