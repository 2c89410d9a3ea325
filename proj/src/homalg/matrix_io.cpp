#include "knotarith/homalg/matrix_io.hpp"

#include "knotarith/errors.hpp"

#include <sstream>

namespace knotarith::homalg {

std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
    out << '\n';
  }
  return out.str();
}

IntMatrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ValidationError("matrix text: bad header");
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok)) throw ValidationError("matrix text: too few entries");
      try {
        m(i, j) = BigInt(tok);
      } catch (const std::exception&) {
        throw ValidationError("matrix text: bad entry '" + tok + "'");
      }
    }
  std::string extra;
  if (in >> extra) throw ValidationError("matrix text: trailing data");
  return m;
}

}  // namespace knotarith::homalg
