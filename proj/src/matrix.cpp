#include "eigenfence/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "eigenfence/errors.hpp"

namespace eigenfence {

RealMatrix::RealMatrix(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    *this = from_rows(copy);
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DimensionError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j])) {
                throw ParseError("non-finite entry at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
            }
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> RealMatrix::column(std::size_t j) const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
    return out;
}

std::vector<double> RealMatrix::column_off_diagonal(std::size_t j) const {
    std::vector<double> out;
    out.reserve(n_ ? n_ - 1 : 0);
    for (std::size_t i = 0; i < n_; ++i)
        if (i != j) out.push_back((*this)(i, j));
    return out;
}

std::vector<double> RealMatrix::row_off_diagonal(std::size_t i) const {
    std::vector<double> out;
    out.reserve(n_ ? n_ - 1 : 0);
    for (std::size_t j = 0; j < n_; ++j)
        if (i != j) out.push_back((*this)(i, j));
    return out;
}

std::vector<double> RealMatrix::diagonal() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, i);
    return out;
}

std::vector<double> RealMatrix::row_sums() const {
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (double x : row(i)) out[i] += x;
    return out;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double RealMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

std::vector<std::vector<double>> RealMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(row(i).begin(), row(i).end());
    return rows;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("matrix product of different sizes");
    const std::size_t n = a.size();
    RealMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RealMatrix operator*(double s, const RealMatrix& a) {
    RealMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) *= s;
    return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("matrix difference of different sizes");
    RealMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) -= b(i, j);
    return c;
}

std::vector<double> operator*(const RealMatrix& a, std::span<const double> x) {
    if (x.size() != a.size()) throw DimensionError("matrix-vector product of different sizes");
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

double norm_one(const RealMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double norm_inf(const RealMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = 0.0;
        for (double x : a.row(i)) s += std::abs(x);
        best = std::max(best, s);
    }
    return best;
}

double row_sum_spread(const RealMatrix& a) {
    if (a.empty()) return 0.0;
    const auto sums = a.row_sums();
    double spread = 0.0;
    for (double s : sums) spread = std::max(spread, std::abs(s - sums.front()));
    return spread;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool looks_like_json(std::string_view text) {
    const auto t = trim(text);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

double parse_number(std::string_view token, std::size_t line) {
    double value = 0.0;
    // from_chars rejects a leading '+', which people do write by hand.
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ParseError("malformed number '" + std::string(token) + "' on line " +
                         std::to_string(line));
    }
    return value;
}

RealMatrix parse_text_matrix(std::string_view text) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        std::vector<double> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t,", pos);
            if (pos == std::string_view::npos) break;
            auto end = line.find_first_of(" \t,", pos);
            if (end == std::string_view::npos) end = line.size();
            row.push_back(parse_number(line.substr(pos, end - pos), line_no));
            pos = end;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("ragged rows: line " + std::to_string(line_no) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix input");
    if (rows.size() != rows.front().size()) {
        throw DimensionError("matrix is not square: " + std::to_string(rows.size()) + "x" +
                             std::to_string(rows.front().size()));
    }
    return RealMatrix::from_rows(rows);
}

std::vector<double> json_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number()) throw ParseError(std::string(what) + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

RealMatrix json_matrix(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) {
        auto row = json_vector(r, "matrix row");
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.size() != rows.front().size()) {
        throw DimensionError("matrix is not square: " + std::to_string(rows.size()) + "x" +
                             std::to_string(rows.front().size()));
    }
    return RealMatrix::from_rows(rows);
}

Problem parse_json_problem(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_array()) return Problem{json_matrix(doc), std::nullopt};
    if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("problem file needs a \"matrix\" key");

    Problem p{json_matrix(doc.at("matrix")), std::nullopt};
    const bool has_value = doc.contains("eigenvalue");
    const bool has_vector = doc.contains("eigenvector");
    if (has_value != has_vector) throw ParseError("\"eigenvalue\" and \"eigenvector\" must be given together");
    if (has_value) {
        if (!doc["eigenvalue"].is_number()) throw ParseError("\"eigenvalue\" must be a number");
        Eigenpair pair{doc["eigenvalue"].get<double>(), json_vector(doc["eigenvector"], "eigenvector")};
        if (!std::isfinite(pair.lambda)) throw ParseError("eigenvalue is not finite");
        if (pair.v.size() != p.matrix.size()) {
            throw DimensionError("eigenvector has " + std::to_string(pair.v.size()) +
                                 " components, matrix is " + std::to_string(p.matrix.size()) + "x" +
                                 std::to_string(p.matrix.size()));
        }
        p.eigenpair = std::move(pair);
    }
    return p;
}

}  // namespace

RealMatrix parse_matrix(std::string_view text) {
    if (looks_like_json(text)) return parse_json_problem(text).matrix;
    return parse_text_matrix(text);
}

Problem parse_problem(std::string_view text) {
    if (looks_like_json(text)) return parse_json_problem(text);
    return Problem{parse_text_matrix(text), std::nullopt};
}

std::string render_text(const RealMatrix& a) {
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j) out += ' ';
            const auto res = std::to_chars(buf, buf + sizeof buf, a(i, j));
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

double check_eigenpair(const RealMatrix& a, const Eigenpair& p) {
    if (p.v.size() != a.size()) {
        throw DimensionError("eigenvector length " + std::to_string(p.v.size()) +
                             " does not match matrix size " + std::to_string(a.size()));
    }
    const auto av = a * std::span<const double>(p.v);
    double worst = 0.0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(av[i] - p.lambda * p.v[i]));
        vmax = std::max(vmax, std::abs(p.v[i]));
    }
    return worst / (1.0 + vmax);
}

void validate_eigenpair(const RealMatrix& a, const Eigenpair& p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("eigenpair tolerance must be positive");
    const double r = check_eigenpair(a, p);
    if (!std::isfinite(p.lambda) ||
        !std::all_of(p.v.begin(), p.v.end(), [](double x) { return std::isfinite(x); })) {
        throw InvalidEigenpairError("eigenpair has non-finite entries");
    }
    if (std::all_of(p.v.begin(), p.v.end(), [](double x) { return x == 0.0; }))
        throw InvalidEigenpairError("eigenvector is the zero vector");
    if (!(r <= tol)) {
        std::ostringstream msg;
        msg << "not an eigenpair: residual " << r << " exceeds tolerance " << tol;
        throw InvalidEigenpairError(msg.str());
    }
}

}  // namespace eigenfence
