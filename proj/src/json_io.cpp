#include "superschur/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace superschur {

Json to_json(const LaurentPoly &p) {
  Json terms = Json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back(Json::array({e, c.get_str()}));
  return Json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("Laurent polynomial must be {\"terms\": [[exponent, coefficient], ...]}");
  std::vector<LaurentPoly::Term> terms;
  for (const auto &t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw std::invalid_argument("bad Laurent term " + t.dump());
    Integer c;
    if (t[1].is_string()) {
      if (c.set_str(t[1].get<std::string>(), 10) != 0)
        throw std::invalid_argument("bad coefficient " + t[1].dump());
    } else if (t[1].is_number_integer()) {
      c = t[1].get<long>();
    } else {
      throw std::invalid_argument("bad coefficient " + t[1].dump());
    }
    terms.emplace_back(t[0].get<int>(), c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const RatFn &f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFn ratfn_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function must be {\"num\": .., \"den\": ..}");
  LaurentPoly den = laurent_from_json(j.at("den"));
  if (den.is_zero())
    throw std::invalid_argument("zero denominator");
  return RatFn(laurent_from_json(j.at("num")), den);
}

Json to_json(const Weight &w) { return Json(w.coords); }

Json to_json(const Root &r) { return Json{{"i", r.i}, {"j", r.j}, {"parity", r.parity}}; }

Json to_json(const ExponentTable &t) {
  Json out = Json::array();
  for (const auto &[r, v] : t.entries())
    out.push_back(Json::array({r.i, r.j, v}));
  return out;
}

Json to_json(const BasisElement &y) {
  return Json{{"A", to_json(y.A)}, {"lambda", to_json(y.lambda)}, {"C", to_json(y.C)}, {"label", y.to_string()}};
}

Json to_json(const CheckResult &r) {
  return Json{{"name", r.name},
              {"citation", r.citation},
              {"passed", r.passed},
              {"witness", r.witness},
              {"detail", r.detail}};
}

Json to_json(const VerificationReport &r) {
  Json out = Json::array();
  for (const auto &c : r.checks())
    out.push_back(to_json(c));
  return out;
}

Json to_json(const QExpr &x) {
  Json out = Json::array();
  for (const auto &[w, c] : x.terms())
    out.push_back(Json::array({w.to_string(), to_json(c)}));
  return out;
}

Json to_json(const Dims &dims, const IdentityInstance &inst, bool expand) {
  Json params = Json::object();
  for (const auto &[k, v] : inst.params)
    params[k] = v;
  Json out{{"name", inst.name},
           {"params", params},
           {"citation", inst.citation},
           {"lhs", inst.lhs.to_string()},
           {"rhs", inst.rhs.to_string()}};
  if (expand) {
    out["lhs_words"] = to_json(to_qexpr(dims, inst.lhs));
    out["rhs_words"] = to_json(to_qexpr(dims, inst.rhs));
  }
  return out;
}

Json matrix_json(const RepMatrix &m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto &[c, v] : m.row(r))
      entries.push_back(Json::array({r, c, to_string(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json matrix_json(const QMatrix &m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto &[c, v] : m.row(r))
      entries.push_back(Json::array({r, c, to_json(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {

template <class T> std::string dense_csv(const SparseMatrix<T> &m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t next = 0;
    const auto &row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c)
        os << ',';
      if (next < row.size() && row[next].first == c)
        os << Scalar<T>::str(row[next++].second);
      else
        os << '0';
    }
    os << '\n';
  }
  return os.str();
}

int int_at(const Json &f, std::size_t k) {
  if (k >= f.size() || !f[k].is_number_integer())
    throw std::invalid_argument("factor " + f.dump() + ": expected an integer at position " + std::to_string(k));
  return f[k].get<int>();
}

} // namespace

std::string matrix_csv(const RepMatrix &m) { return dense_csv(m); }
std::string matrix_csv(const QMatrix &m) { return dense_csv(m); }

KostantMonomial monomial_from_json(const Dims &dims, const Json &j) {
  if (!j.is_array())
    throw std::invalid_argument("monomial must be a JSON list of factors");
  KostantMonomial mono;
  auto check = [&](int i, int hi) {
    if (i < 1 || i > hi)
      throw std::invalid_argument("index " + std::to_string(i) + " out of range 1.." + std::to_string(hi));
  };
  for (const auto &f : j) {
    if (!f.is_array() || f.empty() || !f[0].is_string())
      throw std::invalid_argument("factor must be a list starting with a tag: " + f.dump());
    const std::string tag = f[0].get<std::string>();
    if ((tag == "e" || tag == "f") && f.size() == 2) {
      const int i = int_at(f, 1);
      check(i, dims.rank() - 1);
      Root r = tag == "e" ? Root(dims, i, i + 1) : Root(dims, i + 1, i);
      mono.append(KostantFactor::root_power(r, 1));
    } else if (tag == "H" && (f.size() == 2 || f.size() == 3)) {
      const int i = int_at(f, 1);
      check(i, dims.rank());
      const int k = f.size() == 3 ? int_at(f, 2) : 1;
      mono.append(KostantFactor::cartan_binom(i, k));
    } else if (tag == "x" && (f.size() == 3 || f.size() == 4)) {
      const int i = int_at(f, 1);
      const int jj = int_at(f, 2);
      check(i, dims.rank());
      check(jj, dims.rank());
      if (i == jj)
        throw std::invalid_argument("root vector needs i != j");
      const int k = f.size() == 4 ? int_at(f, 3) : 1;
      mono.append(KostantFactor::root_power(Root(dims, i, jj), k));
    } else if (tag == "1" && f.size() == 2 && f[1].is_array()) {
      std::vector<int> coords;
      for (const auto &c : f[1]) {
        if (!c.is_number_integer())
          throw std::invalid_argument("weight entries must be integers");
        coords.push_back(c.get<int>());
      }
      Weight w(std::move(coords));
      if (!w.in_lambda(dims))
        throw std::invalid_argument("weight " + w.to_string() + " is not in Lambda(m|n,d)");
      mono.append(KostantFactor::idem(std::move(w)));
    } else {
      throw std::invalid_argument("unknown factor " + f.dump());
    }
  }
  return mono;
}

} // namespace superschur
