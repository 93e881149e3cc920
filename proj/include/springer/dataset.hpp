#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include "springer/errors.hpp"
#include "springer/springer.hpp"

namespace springer {

inline constexpr int kDatasetVersion = 1;

struct VersionError : DataError {
    using DataError::DataError;
};
struct CountError : DataError {
    using DataError::DataError;
};
struct FingerprintError : DataError {
    using DataError::DataError;
};

struct Dataset {
    std::shared_ptr<const RootSystem> rs;
    std::shared_ptr<const IntervalLattice> lattice;
    std::shared_ptr<const GroupoidData> groupoid;
};

Dataset build_dataset(const std::string& type, int d, int jobs = 1);

// FNV-1a over the permutation images in interval order
std::uint64_t order_fingerprint(const IntervalLattice& L);

void save_dataset(const Dataset& ds, std::ostream& out);
void save_dataset(const Dataset& ds, const std::string& path);
Dataset load_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);

}  // namespace springer
