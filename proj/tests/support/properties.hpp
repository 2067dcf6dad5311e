#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace props {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0 && cases > 0; }
};

struct Property {
    std::string name;
    std::size_t default_cases;
    std::function<Outcome(std::uint64_t seed, std::size_t cases)> run;
};

const std::vector<Property>& all();
const Property* find(const std::string& name);

// the four suites the acceptance run insists on
std::vector<std::string> core_names();

}  // namespace props
