#include "invsemi/semigroup.hpp"

#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

#include "invsemi/errors.hpp"
#include "invsemi/kernels.hpp"

namespace invsemi {

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Shape: return "shape";
    case Violation::Kind::NonAssociative: return "non-associative";
    case Violation::Kind::BadInverse: return "bad-inverse";
    case Violation::Kind::NonCommutingIdempotents: return "non-commuting-idempotents";
    case Violation::Kind::ZeroNotAbsorbing: return "zero-not-absorbing";
  }
  return "unknown";
}

std::optional<ElemId> InverseSemigroupTable::find(std::string_view label) const {
  for (ElemId i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

ElemId InverseSemigroupTable::at(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw InvalidArgument("no element labelled '" + std::string(label) + "'");
}

RawTable InverseSemigroupTable::to_raw() const {
  RawTable raw;
  raw.mul.assign(n_, std::vector<ElemId>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) raw.mul[a][b] = mul_[a * n_ + b];
  }
  raw.star = star_;
  raw.labels = labels_;
  return raw;
}

namespace {

std::optional<Violation> shape_violation(const RawTable& raw) {
  const std::size_t n = raw.mul.size();
  auto bad = [](std::string msg) {
    return Violation{Violation::Kind::Shape, {}, std::move(msg)};
  };
  if (n == 0) return bad("table is empty; element 0 must be the zero");
  if (raw.star.size() != n) return bad("star has " + std::to_string(raw.star.size()) +
                                       " entries, expected " + std::to_string(n));
  if (!raw.labels.empty() && raw.labels.size() != n) return bad("labels length does not match size");
  for (std::size_t a = 0; a < n; ++a) {
    if (raw.mul[a].size() != n) return bad("row " + std::to_string(a) + " has wrong length");
    for (ElemId v : raw.mul[a]) {
      if (v >= n) return bad("entry " + std::to_string(v) + " out of range in row " + std::to_string(a));
    }
    if (raw.star[a] >= n) return bad("star entry out of range at " + std::to_string(a));
  }
  return std::nullopt;
}

std::string fmt_ids(std::initializer_list<ElemId> ids) {
  std::string s = "(";
  bool first = true;
  for (ElemId i : ids) {
    if (!first) s += ", ";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<Violation> check_table(const RawTable& raw, bool parallel) {
  if (auto v = shape_violation(raw)) return {*v};
  const std::size_t n = raw.mul.size();
  std::vector<ElemId> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = raw.mul[a][b];
  }
  auto m = [&](ElemId a, ElemId b) { return flat[static_cast<std::size_t>(a) * n + b]; };
  std::vector<Violation> out;

  auto triple = parallel ? kernels::find_nonassociative_parallel(flat, n)
                         : kernels::find_nonassociative_serial(flat, n);
  if (triple) {
    auto [a, b, c] = *triple;
    out.push_back({Violation::Kind::NonAssociative, {a, b, c},
                   "(ab)c != a(bc) at " + fmt_ids({a, b, c})});
  }

  for (ElemId s = 0; s < n; ++s) {
    if (m(0, s) != 0 || m(s, 0) != 0) {
      out.push_back({Violation::Kind::ZeroNotAbsorbing, {s}, "0 does not absorb " + std::to_string(s)});
      break;
    }
  }

  // The inverse must exist and be unique; star must name it.
  bool inverse_done = false;
  for (ElemId s = 0; s < n && !inverse_done; ++s) {
    const ElemId t = raw.star[s];
    if (m(m(s, t), s) != s || m(m(t, s), t) != t) {
      out.push_back({Violation::Kind::BadInverse, {s, t},
                     "star(" + std::to_string(s) + ") = " + std::to_string(t) + " is not an inverse"});
      inverse_done = true;
      break;
    }
    for (ElemId x = 0; x < n; ++x) {
      if (x != t && m(m(s, x), s) == s && m(m(x, s), x) == x) {
        out.push_back({Violation::Kind::BadInverse, {s, t, x},
                       "element " + std::to_string(s) + " has inverses " + std::to_string(t) +
                           " and " + std::to_string(x)});
        inverse_done = true;
        break;
      }
    }
  }

  std::vector<ElemId> idem;
  for (ElemId e = 0; e < n; ++e) {
    if (m(e, e) == e) idem.push_back(e);
  }
  for (std::size_t i = 0; i < idem.size(); ++i) {
    bool hit = false;
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (m(idem[i], idem[j]) != m(idem[j], idem[i])) {
        out.push_back({Violation::Kind::NonCommutingIdempotents, {idem[i], idem[j]},
                       "idempotents " + fmt_ids({idem[i], idem[j]}) + " do not commute"});
        hit = true;
        break;
      }
    }
    if (hit) break;
  }
  return out;
}

InverseSemigroupTable make_trusted(RawTable raw) {
  if (auto v = shape_violation(raw)) throw AxiomViolation(v->message);
  InverseSemigroupTable S;
  S.n_ = raw.mul.size();
  S.mul_.resize(S.n_ * S.n_);
  for (std::size_t a = 0; a < S.n_; ++a) {
    for (std::size_t b = 0; b < S.n_; ++b) S.mul_[a * S.n_ + b] = raw.mul[a][b];
  }
  S.star_ = std::move(raw.star);
  S.labels_ = std::move(raw.labels);
  if (S.labels_.empty()) {
    S.labels_.resize(S.n_);
    for (std::size_t i = 0; i < S.n_; ++i) S.labels_[i] = i == 0 ? "0" : "s" + std::to_string(i);
  }
  for (ElemId e = 1; e < S.n_; ++e) {
    if (S.is_idempotent(e)) S.idempotents_.push_back(e);
  }
  return S;
}

InverseSemigroupTable validate_table(RawTable raw, bool parallel) {
  auto violations = check_table(raw, parallel);
  if (!violations.empty()) {
    throw AxiomViolation(to_string(violations.front().kind) + ": " + violations.front().message);
  }
  return make_trusted(std::move(raw));
}

bool natural_leq(const InverseSemigroupTable& S, ElemId s, ElemId t) {
  return S.mul(t, S.dom(s)) == s;
}

bool natural_leq_via(const InverseSemigroupTable& S, ElemId s, ElemId t, OrderForm form) {
  switch (form) {
    case OrderForm::RightDomain: return S.mul(t, S.dom(s)) == s;
    case OrderForm::LeftRange: return S.mul(S.ran(s), t) == s;
    case OrderForm::RightIdempotent:
      for (std::size_t e = 0; e < S.size(); ++e) {
        if (S.is_idempotent(e) && S.mul(t, e) == s) return true;
      }
      return false;
    case OrderForm::LeftIdempotent:
      for (std::size_t e = 0; e < S.size(); ++e) {
        if (S.is_idempotent(e) && S.mul(e, t) == s) return true;
      }
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------

PartialBijection::PartialBijection(std::size_t ground) : images_(ground, kNone) {}

PartialBijection::PartialBijection(std::size_t ground, std::vector<int> images)
    : images_(std::move(images)) {
  if (images_.size() != ground) throw InvalidArgument("partial bijection has wrong ground size");
  std::vector<bool> hit(ground, false);
  for (int y : images_) {
    if (y == kNone) continue;
    if (y < 0 || static_cast<std::size_t>(y) >= ground) {
      throw InvalidArgument("partial bijection image out of range");
    }
    if (hit[y]) throw InvalidArgument("partial bijection is not injective");
    hit[y] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t ground) {
  PartialBijection f(ground);
  for (std::size_t i = 0; i < ground; ++i) f.images_[i] = static_cast<int>(i);
  return f;
}

PartialBijection PartialBijection::partial_identity(std::size_t ground,
                                                    const std::vector<int>& points) {
  PartialBijection f(ground);
  for (int p : points) {
    if (p < 0 || static_cast<std::size_t>(p) >= ground) throw InvalidArgument("point out of range");
    f.images_[p] = p;
  }
  return f;
}

bool PartialBijection::empty() const {
  for (int y : images_) {
    if (y != kNone) return false;
  }
  return true;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection g(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != kNone) g.images_[images_[x]] = static_cast<int>(x);
  }
  return g;
}

PartialBijection operator*(const PartialBijection& f, const PartialBijection& g) {
  if (f.ground() != g.ground()) throw InvalidArgument("composing maps on different ground sets");
  PartialBijection h(f.ground());
  for (std::size_t x = 0; x < g.ground(); ++x) {
    const int y = g.images_[x];
    h.images_[x] = y == PartialBijection::kNone ? PartialBijection::kNone : f.images_[y];
  }
  return h;
}

InverseSemigroupTable generate_from_partial_bijections(const std::vector<PartialBijection>& gens,
                                                       const Caps& caps,
                                                       std::vector<std::string> names) {
  if (gens.empty()) throw InvalidArgument("no generators");
  const std::size_t ground = gens.front().ground();
  if (ground > caps.ground_set) {
    throw CapExceeded("ground set of " + std::to_string(ground) + " points exceeds cap " +
                      std::to_string(caps.ground_set));
  }
  for (const auto& g : gens) {
    if (g.ground() != ground) throw InvalidArgument("generators on different ground sets");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  }
  if (names.size() != gens.size()) throw InvalidArgument("one name per generator required");

  // Alphabet: generators and those inverses that differ from every generator.
  std::vector<PartialBijection> letters;
  std::vector<std::string> letter_names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    letters.push_back(gens[i]);
    letter_names.push_back(names[i]);
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    PartialBijection inv = gens[i].inverse();
    bool known = false;
    for (const auto& l : letters) known = known || l == inv;
    if (!known) {
      letters.push_back(inv);
      letter_names.push_back(names[i] + "^-1");
    }
  }

  std::vector<PartialBijection> elems{PartialBijection(ground)};
  std::vector<std::string> labels{"0"};
  std::map<PartialBijection, ElemId> index{{elems[0], 0}};
  std::deque<ElemId> queue;
  auto add = [&](PartialBijection f, std::string label) {
    if (index.count(f)) return;
    if (elems.size() >= caps.closure) {
      throw CapExceeded("closure exceeds " + std::to_string(caps.closure) + " elements");
    }
    const ElemId id = static_cast<ElemId>(elems.size());
    index.emplace(f, id);
    elems.push_back(std::move(f));
    labels.push_back(std::move(label));
    queue.push_back(id);
  };
  for (std::size_t i = 0; i < letters.size(); ++i) add(letters[i], letter_names[i]);
  // Breadth first, so each label is a shortest word.
  while (!queue.empty()) {
    const ElemId cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      add(elems[cur] * letters[i], labels[cur] + "." + letter_names[i]);
    }
  }

  RawTable raw;
  const std::size_t n = elems.size();
  raw.mul.assign(n, std::vector<ElemId>(n));
  raw.star.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) raw.mul[a][b] = index.at(elems[a] * elems[b]);
    raw.star[a] = index.at(elems[a].inverse());
  }
  raw.labels = std::move(labels);
  return make_trusted(std::move(raw));
}

// ---------------------------------------------------------------------------

RawTable parse_table_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    RawTable raw;
    const std::size_t n = j.at("size").get<std::size_t>();
    raw.mul = j.at("mul").get<std::vector<std::vector<ElemId>>>();
    raw.star = j.at("star").get<std::vector<ElemId>>();
    if (j.contains("labels")) raw.labels = j.at("labels").get<std::vector<std::string>>();
    if (raw.mul.size() != n) {
      throw ParseError("size is " + std::to_string(n) + " but mul has " +
                       std::to_string(raw.mul.size()) + " rows");
    }
    return raw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed semigroup file: ") + e.what());
  }
}

std::string table_to_json(const InverseSemigroupTable& S) {
  const std::size_t n = S.size();
  std::ostringstream out;
  out << "{\n  \"size\": " << n << ",\n  \"mul\": [\n";
  for (std::size_t a = 0; a < n; ++a) {
    out << "    [";
    for (std::size_t b = 0; b < n; ++b) out << (b ? ", " : "") << S.mul(a, b);
    out << "]" << (a + 1 < n ? "," : "") << "\n";
  }
  out << "  ],\n  \"star\": [";
  for (std::size_t a = 0; a < n; ++a) out << (a ? ", " : "") << S.star(a);
  out << "],\n  \"labels\": [";
  for (std::size_t a = 0; a < n; ++a) out << (a ? ", " : "") << nlohmann::json(S.label(a)).dump();
  out << "]\n}\n";
  return out.str();
}

}  // namespace invsemi
