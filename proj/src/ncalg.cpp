#include "potentia/ncalg.hpp"

#include <cctype>

namespace potentia {

std::size_t GenSet::z() const {
  if (!has_z) throw Error("generator set has no z");
  return names.size() - 1;
}

std::size_t GenSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error("unknown generator '" + std::string(name) + "'");
}

GenSet GenSet::standard(std::size_t n, bool with_z) {
  std::vector<std::string> names;
  if (n == 1)
    names = {"x"};
  else if (n == 2)
    names = {"x", "y"};
  else
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (with_z) names.push_back("z");
  return from_names(std::move(names), with_z);
}

GenSet GenSet::from_names(std::vector<std::string> names, bool has_z) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("duplicate generator name " + names[i]);
  if (has_z && names.empty()) throw Error("z requested on empty generator set");
  return GenSet{std::move(names), has_z};
}

GenSetPtr make_gens(std::size_t n, bool with_z) {
  return std::make_shared<const GenSet>(GenSet::standard(n, with_z));
}

// ------------------------------------------------------------------ NcPoly

NcPoly NcPoly::constant(GenSetPtr gens, const Rat& c) { return monomial(std::move(gens), {}, c); }

NcPoly NcPoly::gen(GenSetPtr gens, std::size_t i) {
  if (i >= gens->size()) throw Error("generator index out of range");
  return monomial(std::move(gens), {static_cast<int>(i)});
}

NcPoly NcPoly::monomial(GenSetPtr gens, Word w, const Rat& c) {
  NcPoly p(std::move(gens));
  p.add_term(w, c);
  return p;
}

Rat NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  for (int g : w)
    if (g < 0 || static_cast<std::size_t>(g) >= gens_->size()) throw Error("letter outside generator set");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

std::size_t NcPoly::degree() const {
  if (terms_.empty() || !is_homogeneous()) throw Error("degree of zero or inhomogeneous polynomial");
  return terms_.begin()->first.size();
}

void NcPoly::same_gens(const NcPoly& o) const {
  if (gens_ != o.gens_ && !(gens_ && o.gens_ && *gens_ == *o.gens_))
    throw Error("polynomials over different generator sets");
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  same_gens(o);
  NcPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator-() const { return scaled(Rat(-1)); }

NcPoly NcPoly::scaled(const Rat& c) const {
  NcPoly r(gens_);
  if (c == 0) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, v * c);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  same_gens(o);
  NcPoly r(gens_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  same_gens(o);
  return terms_ == o.terms_;
}

NcPoly nc_mul(const NcPoly& p, const NcPoly& q) { return p * q; }

// ---------------------------------------------------------------- calculus

void NcTensor::add_term(const Word& u, const Word& v, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace({u, v}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NcTensor NcTensor::flipped() const {
  NcTensor t;
  for (const auto& [uv, c] : terms) t.add_term(uv.second, uv.first, c);
  return t;
}

NcPoly cyclic_sum(const NcPoly& a) {
  if (!a.is_homogeneous()) throw Error("cyclic sum of inhomogeneous polynomial");
  NcPoly r(a.gens());
  for (const auto& [w, c] : a.terms()) {
    if (w.empty()) {
      r.add_term(w, c);
      continue;
    }
    for (std::size_t s = 0; s < w.size(); ++s) {
      Word rot(w.begin() + static_cast<long>(s), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(s));
      r.add_term(rot, c);
    }
  }
  return r;
}

NcPoly cyclic_derivative(const NcPoly& w, std::size_t g) {
  if (g >= w.gens()->size()) throw Error("unknown generator");
  if (!w.is_homogeneous()) throw Error("cyclic derivative of inhomogeneous polynomial");
  NcPoly r(w.gens());
  for (const auto& [word, c] : w.terms())
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] != static_cast<int>(g)) continue;
      Word out(word.begin() + static_cast<long>(p) + 1, word.end());
      out.insert(out.end(), word.begin(), word.begin() + static_cast<long>(p));
      r.add_term(out, c);
    }
  return r;
}

NcTensor partial_derivative(const NcPoly& a, std::size_t g) {
  if (g >= a.gens()->size()) throw Error("unknown generator");
  NcTensor t;
  for (const auto& [word, c] : a.terms())
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] != static_cast<int>(g)) continue;
      t.add_term(Word(word.begin(), word.begin() + static_cast<long>(p)),
                 Word(word.begin() + static_cast<long>(p) + 1, word.end()), c);
    }
  return t;
}

NcPoly potential_factor(const NcPoly& w) {
  const GenSet& gs = *w.gens();
  if (!gs.has_z) throw Error("potential needs a z generator");
  const int z = static_cast<int>(gs.z());
  NcPoly f(w.gens());
  for (const auto& [word, c] : w.terms()) {
    if (word.size() != 3 || word[2] != z || word[0] == z || word[1] == z)
      throw Error("not of the form f z with f quadratic in x-generators");
    f.add_term({word[0], word[1]}, c);
  }
  return f;
}

bool euler_check(const NcPoly& w) {
  NcPoly f = potential_factor(w);
  const auto& gens = w.gens();
  NcPoly zgen = NcPoly::gen(gens, gens->z());
  NcPoly left = f * zgen, right = zgen * f;
  for (std::size_t i = 0; i < gens->n(); ++i) {
    NcPoly xi = NcPoly::gen(gens, i);
    NcPoly d = cyclic_derivative(w, i);
    left = left + d * xi;
    right = right + xi * d;
  }
  NcPoly c = cyclic_sum(w);
  return left == c && right == c;
}

bool hessian_symmetry_check(const NcPoly& w) {
  const std::size_t m = w.gens()->size();
  std::vector<NcPoly> d;
  for (std::size_t j = 0; j < m; ++j) d.push_back(cyclic_derivative(w, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (partial_derivative(d[j], i).flipped() != partial_derivative(d[i], j)) return false;
  return true;
}

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images) {
  if (images.size() != p.gens()->size()) throw Error("substitution needs one image per generator");
  if (images.empty()) return p;
  GenSetPtr target = images.front().gens();
  NcPoly r(target);
  for (const auto& [word, c] : p.terms()) {
    NcPoly t = NcPoly::constant(target, c);
    for (int g : word) t = t * images[static_cast<std::size_t>(g)];
    r = r + t;
  }
  return r;
}

// --------------------------------------------------------------- rendering

std::string render_word(const GenSet& gens, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += '*';
    s += gens.names.at(static_cast<std::size_t>(w[i]));
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string render(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    bool neg = c < 0;
    Rat a = abs(c);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (w.empty())
      s += to_string(a);
    else {
      if (a != 1) s += to_string(a) + " ";
      s += render_word(*p.gens(), w);
    }
  }
  return s;
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(GenSetPtr gens, std::string_view text) : gens_(std::move(gens)), s_(text) {}

  NcPoly parse() {
    NcPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse polynomial '" + std::string(s_) + "': " + why + " at offset " +
                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static bool atom_start(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  NcPoly expr() {
    NcPoly r = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      NcPoly t = term();
      r = c == '+' ? r + t : r - t;
    }
    return r;
  }

  NcPoly term() {
    NcPoly r = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * unary();
      } else if (atom_start(c)) {
        r = r * unary();
      } else {
        return r;
      }
    }
  }

  NcPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    NcPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      NcPoly r = NcPoly::constant(gens_, Rat(1));
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  NcPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NcPoly r = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return NcPoly::constant(gens_, parse_rat(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // longest generator name at this position, so "xy" reads as x*y
      std::size_t best = gens_->size(), len = 0;
      for (std::size_t i = 0; i < gens_->size(); ++i) {
        const auto& nm = gens_->names[i];
        if (nm.size() > len && s_.substr(pos_, nm.size()) == nm) {
          best = i;
          len = nm.size();
        }
      }
      if (best == gens_->size()) fail("unknown generator");
      pos_ += len;
      return NcPoly::gen(gens_, best);
    }
    fail("expected a term");
  }

  GenSetPtr gens_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_ncpoly(GenSetPtr gens, std::string_view text) { return Parser(std::move(gens), text).parse(); }

}  // namespace potentia
