#include "hallfock/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hallfock/errors.hpp"

namespace hallfock {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    std::sort(p_.begin(), p_.end(), std::greater<int>());
    for (int x : p_)
        if (x <= 0) throw argument_error("partition parts must be positive");
}

Partition Partition::single(int k) {
    if (k < 0) throw argument_error("negative part");
    Partition p;
    if (k > 0) p.p_ = {k};
    return p;
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

Rat Partition::z() const {
    Rat z = 1;
    int run = 1;
    for (std::size_t i = 0; i < p_.size(); ++i) {
        z *= p_[i];
        if (i > 0 && p_[i] == p_[i - 1])
            ++run;
        else
            run = 1;
        z *= run;
    }
    return z;
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(p_.begin(), p_.end(), value));
}

Partition Partition::concat(const Partition& o) const {
    std::vector<int> v = p_;
    v.insert(v.end(), o.p_.begin(), o.p_.end());
    return Partition(std::move(v));
}

Partition Partition::remove_one(int value) const {
    std::vector<int> v = p_;
    auto it = std::find(v.begin(), v.end(), value);
    if (it == v.end()) throw argument_error("part not present");
    v.erase(it);
    Partition r;
    r.p_ = std::move(v);
    return r;
}

bool Partition::operator<(const Partition& o) const {
    int sa = size(), sb = o.size();
    if (sa != sb) return sa < sb;
    return p_ < o.p_;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p_[i]);
    }
    return s + "]";
}

namespace {

void gen_rec(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(remaining, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mtx;
    static std::map<int, std::vector<Partition>> cache;
    if (n < 0) throw argument_error("partitions of negative integer");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_rec(n, n == 0 ? 1 : n, cur, out);
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        const auto& pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

long partition_count(int n) { return static_cast<long>(partitions_of(n).size()); }

} // namespace hallfock
