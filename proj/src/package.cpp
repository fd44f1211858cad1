#include "snchodge/package.hpp"

namespace snchodge {

namespace {
const CohomologyPackage::DegreeData kZeroDegree{};
}

const CohomologyPackage::DegreeData& CohomologyPackage::at(int l) const {
    if (!in_range(l)) return kZeroDegree;
    return degrees[std::size_t(l)];
}

int CohomologyPackage::explicit_dim(int l) const { return at(l).explicit_dim; }
Dim CohomologyPackage::dim(int l) const { return at(l).dim; }

Mat CohomologyPackage::pairing_at(int l) const {
    if (!in_range(l) || !in_range(2 * n - l))
        return Mat(explicit_dim(l), explicit_dim(2 * n - l));
    auto it = pairing.find(l);
    if (it != pairing.end()) return it->second;
    auto dual = pairing.find(2 * n - l);
    if (dual == pairing.end())
        return Mat(explicit_dim(l), explicit_dim(2 * n - l));
    // Graded commutativity: <x, y> = (-1)^{l(2n-l)} <y, x>.
    Mat t = dual->second.transpose();
    if ((long(l) * (2 * n - l)) % 2 != 0) t = -t;
    return t;
}

Scalar CohomologyPackage::pair(int l, const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const {
    return dot(x, mat_vec(pairing_at(l), y));
}

bool CohomologyPackage::has_cup2(int l) const { return cup2.count(l) > 0; }

Mat CohomologyPackage::cup2_mult(const std::vector<Scalar>& v, int l) const {
    if (int(v.size()) != explicit_dim(2))
        throw std::invalid_argument("degree-2 vector length mismatch");
    auto it = cup2.find(l);
    if (it == cup2.end()) {
        if (explicit_dim(l) == 0 || explicit_dim(l + 2) == 0)
            return Mat(explicit_dim(l + 2), explicit_dim(l));
        throw MissingCupData(name + ": no cup table from degree " + std::to_string(l));
    }
    Mat m(explicit_dim(l + 2), explicit_dim(l));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        m = m + it->second[i].scaled(v[i]);
    }
    return m;
}

std::vector<Scalar> CohomologyPackage::cup_h2(const std::vector<Scalar>& v1,
                                              const std::vector<Scalar>& v2) const {
    return mat_vec(cup2_mult(v1, 2), v2);
}

Scalar CohomologyPackage::top_power(const std::vector<Scalar>& v) const {
    if (n == 0) return Scalar(1);
    std::vector<Scalar> acc = v;
    for (int i = 1; i < n; ++i) acc = mat_vec(cup2_mult(v, 2 * i), acc);
    if (explicit_dim(0) != 1)
        throw MissingCupData(name + ": top power needs a one-dimensional H^0");
    std::vector<Scalar> unit{Scalar(1)};
    return pair(2 * n, acc, unit);
}

bool CohomologyPackage::product_is_symbolic(const std::vector<Scalar>& v1,
                                            const std::vector<Scalar>& v2) const {
    for (const auto& [i, j] : symbolic_products) {
        if (i < int(v1.size()) && j < int(v2.size()) && !v1[i].is_zero() && !v2[j].is_zero())
            return true;
        if (j < int(v1.size()) && i < int(v2.size()) && !v1[j].is_zero() && !v2[i].is_zero())
            return true;
    }
    return false;
}

bool CohomologyPackage::is_flagged_ample(const std::vector<Scalar>& v) const {
    for (const auto& a : ample_classes)
        if (a == v) return true;
    return false;
}

std::vector<Finding> CohomologyPackage::validate() const {
    std::vector<Finding> out;
    auto add = [&](const std::string& code, const std::string& detail) {
        out.push_back(Finding{code, name + ": " + detail});
    };

    if (int(degrees.size()) != 2 * n + 1) {
        add("degree-range", "expected " + std::to_string(2 * n + 1) + " degrees");
        return out;
    }
    for (int l = 0; l <= 2 * n; ++l) {
        const auto& d = degrees[std::size_t(l)];
        if (d.hodge.ambient_dim != d.explicit_dim)
            add("grading-ambient", "degree " + std::to_string(l));
        if (d.hodge.weight != l) add("grading-weight", "degree " + std::to_string(l));
        if (!(d.hodge.total_dim() == d.dim))
            add("grading-total", "degree " + std::to_string(l));
        for (const auto& f : d.hodge.consistency_findings())
            add("grading", "degree " + std::to_string(l) + ": " + f);
    }

    for (int l = 0; l <= 2 * n; ++l) {
        Mat g = pairing_at(l);
        if (g.rows() != explicit_dim(l) || g.cols() != explicit_dim(2 * n - l)) {
            add("pairing-shape", "degree " + std::to_string(l));
            continue;
        }
        if (explicit_dim(l) != explicit_dim(2 * n - l)) {
            add("degenerate-pairing", "degree " + std::to_string(l) + " (dim mismatch)");
            continue;
        }
        if (rank(g) != explicit_dim(l))
            add("degenerate-pairing", "degree " + std::to_string(l));
        if (pairing.count(l) && pairing.count(2 * n - l) && l != 2 * n - l) {
            Mat t = pairing.at(2 * n - l).transpose();
            if ((long(l) * (2 * n - l)) % 2 != 0) t = -t;
            if (!(pairing.at(l) == t)) add("pairing-symmetry", "degree " + std::to_string(l));
        }
    }

    for (const auto& [l, tables] : cup2) {
        if (int(tables.size()) != explicit_dim(2)) {
            add("cup-shape", "degree " + std::to_string(l));
            continue;
        }
        for (const auto& m : tables)
            if (m.rows() != explicit_dim(l + 2) || m.cols() != explicit_dim(l))
                add("cup-shape", "degree " + std::to_string(l));
    }
    // Graded commutativity of the degree-2 square, where available.
    if (has_cup2(2)) {
        const auto& t = cup2.at(2);
        for (int i = 0; i < int(t.size()); ++i)
            for (int j = i + 1; j < int(t.size()); ++j)
                if (!(t[std::size_t(i)].col(j) == t[std::size_t(j)].col(i)))
                    add("cup-commutativity", "degree-2 basis " + std::to_string(i) + "," +
                                                 std::to_string(j));
    }
    // Compatibility of cup tables with the pairing: <a cup b, c> = <b, a cup c>.
    for (const auto& [l, tables] : cup2) {
        int dual = 2 * n - l - 2;
        if (!has_cup2(dual)) continue;
        if (!symbolic_products.empty()) continue;
        Mat p_up = pairing_at(l + 2);
        Mat p_lo = pairing_at(l);
        for (int i = 0; i < int(tables.size()); ++i) {
            Mat lhs = tables[std::size_t(i)].transpose() * p_up;
            Mat rhs = p_lo * cup2.at(dual)[std::size_t(i)];
            if (!(lhs == rhs))
                add("cup-pairing", "degree " + std::to_string(l) + " basis " +
                                       std::to_string(i));
        }
    }
    for (const auto& a : ample_classes)
        if (int(a.size()) != explicit_dim(2)) add("ample-shape", "length mismatch");
    return out;
}

}  // namespace snchodge
