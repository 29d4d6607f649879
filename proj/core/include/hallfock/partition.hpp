#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallfock/poly.hpp"

namespace hallfock {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition single(int k);

    const std::vector<int>& parts() const { return p_; }
    int size() const; // sum of parts
    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    int part(int i) const { return p_[static_cast<std::size_t>(i)]; }

    // z_lambda = (product of multiplicity factorials) * (product of parts)
    Rat z() const;

    // multiplicity of a given part value
    int multiplicity(int value) const;

    Partition concat(const Partition& o) const;
    // removes one copy of the given part (must be present)
    Partition remove_one(int value) const;
    bool contains_part(int value) const { return multiplicity(value) > 0; }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return p_ != o.p_; }
    bool operator<(const Partition& o) const;

    std::string str() const;

private:
    std::vector<int> p_;
};

// All partitions of n, cached.
const std::vector<Partition>& partitions_of(int n);
// All partitions of size <= n (sizes ascending).
std::vector<Partition> partitions_up_to(int n);
// Number of partitions of n.
long partition_count(int n);

} // namespace hallfock
