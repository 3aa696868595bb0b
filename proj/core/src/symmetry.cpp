#include "dimer/symmetry.hpp"

#include <sstream>

#include "dimer/errors.hpp"

namespace dimer {

bool WeightFunction::strictly_positive() const {
  for (const auto& w : weights)
    if (sgn(w) <= 0) return false;
  return true;
}

bool WeightFunction::below_one() const {
  for (const auto& w : weights)
    if (w >= 1) return false;
  return true;
}

std::vector<long> WeightFunction::integral() const {
  mpz_class l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), degree.get_den_mpz_t());
  std::vector<long> out;
  for (const auto& w : weights) {
    mpq_class s = w * l;
    out.push_back(s.get_num().get_si());
  }
  return out;
}

long WeightFunction::integral_degree() const {
  mpz_class l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), degree.get_den_mpz_t());
  mpq_class s = degree * l;
  return s.get_num().get_si();
}

WeightFunction WeightFunction::scaled(const Rational& k) const {
  WeightFunction r = *this;
  for (auto& w : r.weights) w *= k;
  r.degree *= k;
  return r;
}

std::string WeightFunction::to_string() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < weights.size(); ++a) os << (a ? "," : "") << weights[a].get_str();
  os << " degree " << degree.get_str();
  return os.str();
}

bool euler_check(const Quiver& q) { return q.num_vertices - q.num_arrows() + q.num_faces() == 0; }

bool is_weight_function(const Quiver& q, const WeightFunction& r) {
  for (const auto& f : q.faces) {
    Rational s = 0;
    for (int a : f.boundary) s += r.weights[a];
    if (s != r.degree) return false;
  }
  return true;
}

bool is_anomaly_free(const Quiver& q, const WeightFunction& r) {
  std::vector<Rational> sum(q.num_vertices, 0);
  std::vector<long> heads(q.num_vertices, 0);
  for (int a = 0; a < q.num_arrows(); ++a) {
    sum[q.head(a)] += r.weights[a];
    sum[q.tail(a)] += r.weights[a];
    ++heads[q.head(a)];
  }
  for (int v = 0; v < q.num_vertices; ++v)
    if (sum[v] != r.degree * (heads[v] - 1)) return false;
  return is_weight_function(q, r);
}

WeightFunction default_r_symmetry(const std::vector<PerfectMatching>& matchings, int num_arrows) {
  WeightFunction r;
  r.weights.assign(num_arrows, 0);
  for (const auto& m : matchings)
    for (int e : m.edges) r.weights[e] += 1;
  r.degree = static_cast<long>(matchings.size());
  if (!r.strictly_positive()) throw PreconditionError("no R-symmetry from matchings");
  return r;
}

namespace {

std::optional<WeightFunction> solve(const Quiver& q, bool rhombic) {
  if (!euler_check(q)) return std::nullopt;
  const int n = q.num_arrows();
  // Columns: R (n), t, s (n), u, [s' (n)].
  const int col_t = n, col_s = n + 1, col_u = 2 * n + 1, col_s2 = 2 * n + 2;
  const int ncols = rhombic ? 3 * n + 2 : 2 * n + 2;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  auto row = [&]() { return std::vector<Rational>(ncols, 0); };
  for (const auto& f : q.faces) {
    auto r = row();
    for (int a : f.boundary) r[a] += 1;
    A.push_back(r);
    b.push_back(2);
  }
  for (int v = 0; v < q.num_vertices; ++v) {
    auto r = row();
    long heads = 0;
    for (int a = 0; a < n; ++a) {
      if (q.head(a) == v) { r[a] += 1; ++heads; }
      if (q.tail(a) == v) r[a] += 1;
    }
    A.push_back(r);
    b.push_back(2 * (heads - 1));
  }
  for (int a = 0; a < n; ++a) {
    auto r = row();
    r[a] = 1;
    r[col_t] = -1;
    r[col_s + a] = -1;
    A.push_back(r);
    b.push_back(0);
    if (rhombic) {
      auto r2 = row();
      r2[a] = 1;
      r2[col_t] = 1;
      r2[col_s2 + a] = 1;
      A.push_back(r2);
      b.push_back(1);
    }
  }
  {
    auto r = row();
    r[col_t] = 1;
    r[col_u] = 1;
    A.push_back(r);
    b.push_back(1);
  }
  std::vector<Rational> c(ncols, 0);
  c[col_t] = 1;
  auto res = lp_maximize(A, b, c);
  if (res.status != LPResult::Status::Optimal || sgn(res.value) <= 0) return std::nullopt;
  WeightFunction w;
  w.weights.assign(res.x.begin(), res.x.begin() + n);
  w.degree = 2;
  return w;
}

}  // namespace

std::optional<WeightFunction> find_anomaly_free(const Quiver& q) { return solve(q, false); }
std::optional<WeightFunction> find_rhombic(const Quiver& q) { return solve(q, true); }

}  // namespace dimer
