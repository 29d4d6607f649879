#include "hallfock/varreg.hpp"

#include <map>
#include <mutex>

#include "hallfock/errors.hpp"

namespace hallfock {

namespace {

struct Registry {
    std::mutex mtx;
    std::vector<std::string> names{"q1", "q2"};
    std::vector<bool> zflag{false, false};
    std::map<std::string, VarId> index{{"q1", 0}, {"q2", 1}};

    VarId intern(const std::string& n, bool is_z) {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = index.find(n);
        if (it != index.end()) return it->second;
        VarId id = static_cast<VarId>(names.size());
        names.push_back(n);
        zflag.push_back(is_z);
        index.emplace(n, id);
        return id;
    }
};

Registry& reg() {
    static Registry r;
    return r;
}

} // namespace

VarId VarReg::u(int i) {
    if (i < 1) throw argument_error("u-index must be >= 1");
    return reg().intern("u" + std::to_string(i), false);
}

VarId VarReg::z(int a) {
    if (a < 1) throw argument_error("z-index must be >= 1");
    return reg().intern("z" + std::to_string(a), true);
}

const std::string& VarReg::name(VarId v) {
    auto& r = reg();
    std::lock_guard<std::mutex> lock(r.mtx);
    if (v < 0 || static_cast<std::size_t>(v) >= r.names.size())
        throw argument_error("unknown variable id " + std::to_string(v));
    return r.names[static_cast<std::size_t>(v)];
}

VarId VarReg::lookup(const std::string& name) {
    auto& r = reg();
    std::lock_guard<std::mutex> lock(r.mtx);
    auto it = r.index.find(name);
    return it == r.index.end() ? VarId(-1) : it->second;
}

bool VarReg::is_z(VarId v) {
    auto& r = reg();
    std::lock_guard<std::mutex> lock(r.mtx);
    if (v < 0 || static_cast<std::size_t>(v) >= r.zflag.size()) return false;
    return r.zflag[static_cast<std::size_t>(v)];
}

std::size_t VarReg::count() {
    auto& r = reg();
    std::lock_guard<std::mutex> lock(r.mtx);
    return r.names.size();
}

void VarReg::ensure_rank(int r) {
    for (int i = 1; i <= r; ++i) u(i);
}

} // namespace hallfock
