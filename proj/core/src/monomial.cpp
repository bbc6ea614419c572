#include "syz/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace syz {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::int64_t parse_int(std::string_view sv, const std::string& ctx) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc{} || ptr != sv.data() + sv.size())
    bad("monomial: bad integer '" + std::string(sv) + "' in " + ctx);
  return v;
}

} // namespace

Monomial::Monomial(std::vector<std::int64_t> exponents) : exps_(std::move(exponents)), degree_(0) {
  if (exps_.empty()) bad("monomial: empty exponent vector");
  for (auto e : exps_) {
    if (e < 0) bad("monomial: negative exponent");
    if (e > kMaxExponent) bad("monomial: exponent exceeds " + std::to_string(kMaxExponent));
    degree_ += e;
  }
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) bad("monomial: support_mask needs num_vars <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  return std::lexicographical_compare_three_way(exps_.begin(), exps_.end(), o.exps_.begin(),
                                                o.exps_.end());
}

std::string Monomial::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    out << 'x' << i;
    if (exps_[i] != 1) out << '^' << exps_[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

Monomial Monomial::parse(const std::string& text, std::size_t num_vars) {
  if (num_vars == 0) bad("monomial: num_vars must be positive");
  if (text.empty()) bad("monomial: empty text");
  std::vector<std::int64_t> exps(num_vars, 0);
  if (text == "1") return Monomial(std::move(exps));

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view factor(text.data() + pos, end - pos);
    if (factor.empty() || factor[0] != 'x') bad("monomial: bad factor in '" + text + "'");
    factor.remove_prefix(1);
    std::size_t caret = factor.find('^');
    std::string_view idx_sv = factor.substr(0, caret);
    std::int64_t idx = parse_int(idx_sv, "'" + text + "'");
    std::int64_t exp = 1;
    if (caret != std::string_view::npos) exp = parse_int(factor.substr(caret + 1), "'" + text + "'");
    if (idx < 0 || static_cast<std::size_t>(idx) >= num_vars)
      bad("monomial: variable x" + std::to_string(idx) + " out of range in '" + text + "'");
    if (exp <= 0) bad("monomial: non-positive exponent in '" + text + "'");
    if (exps[static_cast<std::size_t>(idx)] != 0)
      bad("monomial: repeated variable in '" + text + "'");
    exps[static_cast<std::size_t>(idx)] = exp;
    pos = end + 1;
  }
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) bad("monomial: gcd of mismatched variable counts");
  std::vector<std::int64_t> exps(a.num_vars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(exps));
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) bad("monomial: divides on mismatched variable counts");
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a.exponents()[i] > b.exponents()[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

MonomialSet::MonomialSet(std::size_t n, std::vector<Monomial> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  if (monomials_.empty()) bad("monomial set: empty");
  std::unordered_set<Monomial, MonomialHash> seen;
  for (const auto& m : monomials_) {
    if (m.num_vars() != n_ + 1)
      bad("monomial set: member has " + std::to_string(m.num_vars()) + " variables, expected " +
          std::to_string(n_ + 1));
    if (!seen.insert(m).second) bad("monomial set: duplicate member " + m.to_text());
  }
}

std::optional<std::int64_t> MonomialSet::uniform_degree() const {
  std::int64_t d = monomials_.front().degree();
  for (const auto& m : monomials_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

MonomialSet MonomialSet::sorted_lex() const {
  auto ms = monomials_;
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  return MonomialSet(n_, std::move(ms));
}

std::string MonomialSet::to_text() const {
  std::string out;
  for (const auto& m : monomials_) {
    out += m.to_text();
    out += '\n';
  }
  return out;
}

MonomialSet MonomialSet::parse_text(const std::string& text, std::size_t n) {
  std::vector<Monomial> ms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t start = line.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    ms.push_back(Monomial::parse(line.substr(start), n + 1));
  }
  return MonomialSet(n, std::move(ms));
}

bool is_basepoint_free(const MonomialSet& s) {
  if (s.n() > 16) bad("is_basepoint_free: supports n <= 16");
  const std::size_t nv = s.num_vars();
  std::vector<std::uint64_t> supports;
  supports.reserve(s.size());
  for (const auto& m : s.monomials()) supports.push_back(m.support_mask());
  const std::uint64_t full = (std::uint64_t{1} << nv) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    bool covered = false;
    for (auto sm : supports) {
      if ((sm & ~mask) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

} // namespace syz
