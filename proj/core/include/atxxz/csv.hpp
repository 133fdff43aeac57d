#pragma once

#include <filesystem>
#include <string>

#include "atxxz/sweep.hpp"

namespace atxxz {

inline constexpr const char* kCsvHeader = "model,chain_spins,delta,beta,block,quantity,value,converged";

/// Long-format CSV, numbers printed with 12 significant digits.
std::string to_csv(const SweepResult& result);

/// Throws ArgumentError on a malformed header or row.
SweepResult parse_csv(const std::string& text);

/// Writes through a temporary file in the same directory, then renames.
void write_csv(const SweepResult& result, const std::filesystem::path& path);
SweepResult read_csv(const std::filesystem::path& path);

}  // namespace atxxz
