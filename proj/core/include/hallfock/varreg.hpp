#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hallfock {

using VarId = std::int32_t;

// Global ordered alphabet of variables.  q1 and q2 are always present with
// the lowest ids; framing variables u<i> and integration variables z<a> are
// registered on demand.  The registry is append-only and synchronized, so
// ids handed out stay valid for the lifetime of the process.
class VarReg {
public:
    static constexpr VarId q1 = 0;
    static constexpr VarId q2 = 1;

    // Returns the id of u<i> (1-based), registering it if needed.
    static VarId u(int i);
    // Returns the id of z<a> (1-based), registering it if needed.
    static VarId z(int a);

    static const std::string& name(VarId v);
    // -1 if the name is unknown.
    static VarId lookup(const std::string& name);

    static bool is_z(VarId v);
    static std::size_t count();

    // Ensures u1..ur exist.
    static void ensure_rank(int r);
};

} // namespace hallfock
