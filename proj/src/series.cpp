#include "pm/series.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pm {

const Rational TruncatedSeries::zero_ = Rational(0);

static int total_degree(const std::vector<int>& x) {
    int t = 0;
    for (int v : x) t += v;
    return t;
}

bool TruncatedSeries::in_range(int n, int j, const std::vector<int>& x) const {
    if ((int)x.size() != x_arity_) throw std::invalid_argument("x-multidegree arity mismatch");
    return n >= 0 && n <= z_order_ && j >= 0 && j <= 2 * n && total_degree(x) <= x_degree_bound_;
}

void TruncatedSeries::set(int n, int j, const std::vector<int>& x, const Rational& v) {
    if (!in_range(n, j, x)) return;
    Key k{n, j, x};
    if (v == 0) terms_.erase(k);
    else terms_[k] = v;
}

void TruncatedSeries::add_to(int n, int j, const std::vector<int>& x, const Rational& v) {
    if (!in_range(n, j, x) || v == 0) return;
    Key k{n, j, x};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), v);
    } else {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

const Rational& TruncatedSeries::coeff(int n, int j, const std::vector<int>& x) const {
    if (!in_range(n, j, x)) throw std::out_of_range("coefficient query outside truncation");
    auto it = terms_.find(Key{n, j, x});
    return it == terms_.end() ? zero_ : it->second;
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    if (x_arity_ != other.x_arity_) throw std::invalid_argument("series arity mismatch");
    TruncatedSeries r(std::min(z_order_, other.z_order_), x_arity_,
                      std::min(x_degree_bound_, other.x_degree_bound_));
    for (const auto& [k, v] : terms_) r.add_to(k.n, k.j, k.x, v);
    for (const auto& [k, v] : other.terms_) r.add_to(k.n, k.j, k.x, v);
    return r;
}

TruncatedSeries TruncatedSeries::negate() const {
    TruncatedSeries r(z_order_, x_arity_, x_degree_bound_);
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const {
    return add(other.negate());
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (x_arity_ != other.x_arity_) throw std::invalid_argument("series arity mismatch");
    TruncatedSeries r(std::min(z_order_, other.z_order_), x_arity_,
                      std::min(x_degree_bound_, other.x_degree_bound_));
    std::vector<int> xs(x_arity_);
    for (const auto& [ka, va] : terms_) {
        if (ka.n > r.z_order_) continue;
        for (const auto& [kb, vb] : other.terms_) {
            int n = ka.n + kb.n;
            if (n > r.z_order_) continue;
            int t = 0;
            bool ok = true;
            for (int i = 0; i < x_arity_; ++i) {
                xs[i] = ka.x[i] + kb.x[i];
                t += xs[i];
                if (t > r.x_degree_bound_) { ok = false; break; }
            }
            if (!ok) continue;
            r.add_to(n, ka.j + kb.j, xs, va * vb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::divided_difference_u() const {
    // (F(u) - F(1))/(u - 1): with p(u) = sum_j p_j u^j the quotient is
    // q_i = sum_{j > i} p_j, a suffix sum over u-degrees. Always exact.
    TruncatedSeries r(z_order_, x_arity_, x_degree_bound_);
    for (const auto& [k, v] : terms_) {
        for (int i = 0; i < k.j; ++i) r.add_to(k.n, i, k.x, v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::eval_u1() const {
    TruncatedSeries r(z_order_, x_arity_, x_degree_bound_);
    for (const auto& [k, v] : terms_) r.add_to(k.n, 0, k.x, v);
    return r;
}

TruncatedSeries TruncatedSeries::one(int z_order, int x_arity, int x_degree_bound) {
    TruncatedSeries r(z_order, x_arity, x_degree_bound);
    r.set(0, 0, std::vector<int>(x_arity, 0), Rational(1));
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return z_order_ == o.z_order_ && x_arity_ == o.x_arity_ &&
           x_degree_bound_ == o.x_degree_bound_ && terms_ == o.terms_;
}

void TruncatedSeries::dump(std::ostream& os) const {
    os << "# pm-series z_order=" << z_order_ << " x_arity=" << x_arity_
       << " x_degree_bound=" << x_degree_bound_ << "\n";
    for (const auto& [k, v] : terms_) {
        os << k.n << " " << k.j << " ";
        if (x_arity_ == 0) {
            os << "-";
        } else {
            for (int i = 0; i < x_arity_; ++i) {
                if (i) os << ",";
                os << k.x[i];
            }
        }
        os << " " << to_string(v) << "\n";
    }
}

TruncatedSeries TruncatedSeries::load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty series stream");
    int N = -1, r = -1, K = -1;
    {
        std::istringstream h(line);
        std::string tag, marker;
        h >> marker >> tag;
        if (marker != "#" || tag != "pm-series") throw std::invalid_argument("missing series header");
        std::string kv;
        while (h >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) continue;
            std::string key = kv.substr(0, eq);
            int val = std::stoi(kv.substr(eq + 1));
            if (key == "z_order") N = val;
            else if (key == "x_arity") r = val;
            else if (key == "x_degree_bound") K = val;
        }
    }
    if (N < 0 || r < 0 || K < 0) throw std::invalid_argument("incomplete series header");
    TruncatedSeries s(N, r, K);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int n, j;
        std::string xs, q;
        if (!(ls >> n >> j >> xs >> q)) throw std::invalid_argument("bad series line: " + line);
        std::vector<int> x;
        if (xs != "-") {
            std::istringstream xss(xs);
            std::string part;
            while (std::getline(xss, part, ',')) x.push_back(std::stoi(part));
        }
        if ((int)x.size() != r) throw std::invalid_argument("series line arity mismatch: " + line);
        s.set(n, j, x, parse_rational(q));
    }
    return s;
}

} // namespace pm
