#include "qclust/matrix.hpp"

#include <sstream>

namespace qclust {

IntMatrix zeroMatrix(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, std::vector<long>(cols, 0));
}

IntMatrix identityMatrix(std::size_t n) {
    IntMatrix m = zeroMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::size_t rowCount(const IntMatrix& m) { return m.size(); }
std::size_t colCount(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t = zeroMatrix(colCount(m), rowCount(m));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r = zeroMatrix(rowCount(a), colCount(b));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < colCount(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntMatrix negate(const IntMatrix& m) {
    IntMatrix r = m;
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return r;
}

bool isSkewSymmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != -m[j][i]) return false;
    }
    return true;
}

std::string formatMatrix(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace qclust
