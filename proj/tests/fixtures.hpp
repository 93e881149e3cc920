#pragma once
// shared small instances; built once per process
#include <map>
#include <memory>
#include <string>

#include "springer/dataset.hpp"
#include "springer/verify.hpp"

namespace fixtures {

struct Instance {
    springer::Dataset ds;
    std::shared_ptr<const springer::Garside> E;
    std::shared_ptr<const springer::Parabolics> P;
};

inline const Instance& get(const std::string& type, int d) {
    static std::map<std::pair<std::string, int>, Instance> cache;
    auto key = std::make_pair(type, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
        Instance in;
        in.ds = springer::build_dataset(type, d);
        in.E = std::make_shared<const springer::Garside>(in.ds.groupoid);
        in.P = std::make_shared<const springer::Parabolics>(in.E);
        it = cache.emplace(key, std::move(in)).first;
    }
    return it->second;
}

}  // namespace fixtures
