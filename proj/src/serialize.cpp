#include "qtorus/serialize.hpp"

namespace qtorus {

json to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat intmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw validation_error("integer matrix: expected a nonempty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) throw validation_error("integer matrix: rows must be arrays");
    const int cols = static_cast<int>(j[0].size());
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw validation_error("integer matrix: ragged rows");
        for (int c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer()) throw validation_error("integer matrix: non-integer entry");
            m(i, c) = j[i][c].get<i64>();
        }
    }
    return m;
}

json to_json(const SymplecticMatrix& g) { return to_json(g.entries()); }

SymplecticMatrix symplectic_from_json(const json& j) { return SymplecticMatrix(intmat_from_json(j)); }

json to_json(const SiegelPoint& T) {
    json rows = json::array();
    for (int i = 0; i < T.n(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < T.n(); ++j2)
            row.push_back(json::array({T.mat()(i, j2).real(), T.mat()(i, j2).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

bool is_pair_of_numbers(const json& j) {
    return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

} // namespace

SiegelPoint siegel_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw validation_error("SiegelPoint: expected a nonempty array of rows");
    // 1x1 shorthand: "[[re, im]]" means a single entry, not a row of reals
    if (j.size() == 1 && is_pair_of_numbers(j[0])) {
        CMat t(1, 1);
        t(0, 0) = cplx(j[0][0].get<double>(), j[0][1].get<double>());
        return SiegelPoint(t);
    }
    const int n = static_cast<int>(j.size());
    CMat t(n, n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
            throw validation_error("SiegelPoint: expected an n x n array of [re, im] pairs");
        for (int c = 0; c < n; ++c) {
            if (!is_pair_of_numbers(j[i][c]))
                throw validation_error("SiegelPoint: entries must be [re, im] pairs");
            t(i, c) = cplx(j[i][c][0].get<double>(), j[i][c][1].get<double>());
        }
    }
    return SiegelPoint(t);
}

json to_json(const AlgebraElement& a, double flag_threshold) {
    json terms = json::array();
    for (const auto& [w, c] : a.support()) {
        json t;
        t["w1"] = std::vector<int>(w.w1.begin(), w.w1.end());
        t["w2"] = std::vector<int>(w.w2.begin(), w.w2.end());
        t["re"] = c.real();
        t["im"] = c.imag();
        if (flag_threshold > 0 && std::abs(c) < flag_threshold) t["below_resolution"] = true;
        terms.push_back(std::move(t));
    }
    return terms;
}

AlgebraElement algebra_from_json(const json& j, const SiegelPoint& fiber) {
    if (!j.is_array()) throw validation_error("AlgebraElement: expected an array of terms");
    AlgebraElement a(fiber);
    for (const auto& t : j) {
        if (!t.contains("w1") || !t.contains("w2") || !t.contains("re") || !t.contains("im"))
            throw validation_error("AlgebraElement: term must have w1, w2, re, im");
        const auto v1 = t["w1"].get<std::vector<int>>();
        const auto v2 = t["w2"].get<std::vector<int>>();
        IVec w1(static_cast<int>(v1.size())), w2(static_cast<int>(v2.size()));
        for (std::size_t i = 0; i < v1.size(); ++i) w1[static_cast<int>(i)] = v1[i];
        for (std::size_t i = 0; i < v2.size(); ++i) w2[static_cast<int>(i)] = v2[i];
        a.add(LatticePoint(w1, w2), cplx(t["re"].get<double>(), t["im"].get<double>()));
    }
    return a;
}

json to_json(const CrossedElement& b) {
    json terms = json::array();
    for (const auto& [g, a] : b.terms()) terms.push_back(json{{"g", to_json(g)}, {"element", to_json(a)}});
    return terms;
}

json to_json(const CVec& z) {
    json arr = json::array();
    for (int i = 0; i < z.size(); ++i) arr.push_back(json::array({z[i].real(), z[i].imag()}));
    return arr;
}

CVec cvec_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("complex vector: expected an array");
    CVec z(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (is_pair_of_numbers(j[i]))
            z[static_cast<int>(i)] = cplx(j[i][0].get<double>(), j[i][1].get<double>());
        else if (j[i].is_number())
            z[static_cast<int>(i)] = cplx(j[i].get<double>(), 0.0);
        else
            throw validation_error("complex vector: entries must be numbers or [re, im] pairs");
    }
    return z;
}

} // namespace qtorus
