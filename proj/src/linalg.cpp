#include "hhd/linalg.hpp"

#include <limits>

namespace hhd::linalg {

namespace {

// QR of the long side preserves singular values and leaves a square factor
// of size min(rows, cols).
Eigen::MatrixXd square_reduction(const Eigen::MatrixXd& m) {
    if (m.rows() == m.cols()) return m;
    Eigen::MatrixXd tall;
    if (m.rows() > m.cols())
        tall = m;
    else
        tall = m.transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(tall);
    return qr.matrixQR()
        .topRows(tall.cols())
        .triangularView<Eigen::Upper>()
        .toDenseMatrix();
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(square_reduction(m));
    return svd.singularValues();
}

int numerical_rank(const Eigen::MatrixXd& m) {
    const Eigen::VectorXd sv = singular_values(m);
    if (sv.size() == 0) return 0;
    const double eps = std::numeric_limits<double>::epsilon();
    const double threshold = static_cast<double>(std::max(m.rows(), m.cols())) * eps * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return rank;
}

void dominant_rank1(const Eigen::MatrixXd& m, Eigen::VectorXd& u, Eigen::VectorXd& sv) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    u = svd.matrixU().col(0);
    sv = svd.singularValues()(0) * svd.matrixV().col(0);
}

}  // namespace hhd::linalg
