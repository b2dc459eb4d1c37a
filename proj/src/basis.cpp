#include "qmatch/basis.hpp"

#include "qmatch/errors.hpp"

namespace qmatch {

std::string to_ket(BasisState z, int m) {
    std::string s(static_cast<std::size_t>(m), '0');
    for (int i = 0; i < m; ++i) {
        if ((z >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

BasisState from_ket(const std::string& ket) {
    BasisState z = 0;
    if (ket.size() > 64) throw InvalidConfig("ket string longer than 64 qubits: " + ket);
    for (std::size_t i = 0; i < ket.size(); ++i) {
        if (ket[i] == '1') {
            z |= BasisState{1} << i;
        } else if (ket[i] != '0') {
            throw InvalidConfig("ket string must be binary: " + ket);
        }
    }
    return z;
}

} // namespace qmatch
