#pragma once

#include <string>
#include <vector>

namespace qclust {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix zeroMatrix(std::size_t rows, std::size_t cols);
IntMatrix identityMatrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix negate(const IntMatrix& m);
bool isSkewSymmetric(const IntMatrix& m);
std::size_t rowCount(const IntMatrix& m);
std::size_t colCount(const IntMatrix& m);
std::string formatMatrix(const IntMatrix& m);

}  // namespace qclust
