#include "syz/report.hpp"

#include "syz/json_io.hpp"
#include "syz/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace syz {

namespace {

std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t> cell_key_tuple(
    const AtlasCell& c) {
  return {c.n, c.a, c.b, c.d ? *c.d : std::int64_t{-1}};
}

} // namespace

std::string AtlasCell::key() const {
  std::string k = "cert:n=" + std::to_string(n) + ",a=" + std::to_string(a) +
                  ",b=" + std::to_string(b) + ",d=";
  k += d ? std::to_string(*d) : "-";
  return k;
}

std::vector<AtlasCell> atlas_cells(const AtlasJob& job) {
  if (job.a_range.has_value() == job.m_range.has_value())
    throw std::invalid_argument("atlas job needs exactly one of an a-range or an m-range");

  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> seen;
  std::vector<AtlasCell> cells;
  auto emit = [&](std::int64_t n, std::int64_t a, std::int64_t b,
                  std::optional<std::int64_t> d) {
    if (b < 1 || a <= b) return;
    AtlasCell c{n, a, b, d};
    if (seen.insert(cell_key_tuple(c)).second) cells.push_back(c);
  };

  for (std::int64_t n : job.ns) {
    for (std::int64_t b = job.b_range.first; b <= job.b_range.second; ++b) {
      std::vector<std::int64_t> as;
      if (job.a_range) {
        for (std::int64_t a = job.a_range->first; a <= job.a_range->second; ++a)
          as.push_back(a);
      } else {
        for (std::int64_t m = job.m_range->first; m <= job.m_range->second; ++m)
          for (std::int64_t j = job.j_range.first; j <= job.j_range.second; ++j)
            if (j >= 0 && j <= b - 1) as.push_back(m * b - j);
      }
      for (std::int64_t a : as) {
        if (job.ds.empty())
          emit(n, a, b, std::nullopt);
        else
          for (std::int64_t d : job.ds) emit(n, a, b, d);
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const AtlasCell& x, const AtlasCell& y) {
    return cell_key_tuple(x) < cell_key_tuple(y);
  });
  return cells;
}

ResultCache::ResultCache(std::optional<std::string> path) : path_(std::move(path)) {
  if (!path_) return;
  std::ifstream in(*path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (!j.is_object() || j.value("engine", "") != ENGINE_VERSION) continue;
      map_[j.at("key").get<std::string>()] = j.at("value").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      continue; // ignore foreign or truncated lines
    }
  }
}

std::optional<std::string> ResultCache::get(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const std::string& value) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!map_.emplace(key, value).second) return;
  if (!path_) return;
  nlohmann::json j;
  j["engine"] = ENGINE_VERSION;
  j["key"] = key;
  j["value"] = value;
  std::ofstream out(*path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + *path_);
  out << j.dump() << '\n';
}

AtlasOutcome run_atlas(const AtlasJob& job) {
  auto cells = atlas_cells(job);
  ResultCache cache(job.cache_path);

  AtlasOutcome out;
  out.lines.assign(cells.size(), {});
  std::vector<std::size_t> misses;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (auto hit = cache.get(cells[i].key())) {
      out.lines[i] = *hit;
      ++out.cache_hits;
    } else {
      misses.push_back(i);
    }
  }
  out.computed = misses.size();

  auto compute = [&](std::size_t idx) {
    const auto& c = cells[idx];
    out.lines[idx] = certificate_to_json(certify(c.a, c.b, c.n, c.d));
  };
  const std::size_t nthreads =
      std::min<std::size_t>(std::max(job.threads, 1), std::max<std::size_t>(misses.size(), 1));
  if (nthreads <= 1) {
    for (auto idx : misses) compute(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= misses.size()) return;
          compute(misses[i]);
        }
      });
    for (auto& th : pool) th.join();
  }
  // Cache writes happen after the parallel phase, in cell order, so the cache
  // file is deterministic too.
  for (auto idx : misses) cache.put(cells[idx].key(), out.lines[idx]);
  return out;
}

std::string render_rational(const Rational& x, bool approx) {
  std::string s = to_pq_string(x);
  if (approx && denominator(x) != 1) {
    std::ostringstream os;
    os << " (~" << std::setprecision(6) << std::fixed << syz::approx(x) << ")";
    s += os.str();
  }
  return s;
}

std::string render_linear_form(const Rational& alpha, const Rational& beta, bool approx) {
  std::string s = render_rational(alpha, approx) + " d";
  if (beta < 0)
    s += " - " + render_rational(-beta, approx);
  else if (beta > 0)
    s += " + " + render_rational(beta, approx);
  return s;
}

std::string render_per_rank_table(const SlopeProfile& p, bool approx) {
  std::ostringstream os;
  os << "r' | mu_max\n";
  for (const auto& [r, entry] : p.per_size)
    os << std::setw(2) << (r - 1) << " | " << render_rational(entry.value, approx) << "\n";
  return os.str();
}

std::string render_profile(const SlopeProfile& p, const MonomialSet& s, bool approx) {
  std::ostringstream os;
  os << "mu_max = " << render_rational(p.mu_max, approx) << " at r = " << p.mu_max_r
     << " (r' = " << (p.mu_max_r - 1) << "), witness gcd = "
     << p.mu_max_witness_gcd().to_text() << "\n";
  auto w = witness_subset(p, s, p.mu_max_r);
  os << "witness subset:";
  for (const auto& m : w) os << " " << m.to_text();
  os << "\n";
  if (auto proper = p.mu_max_proper())
    os << "mu_max_proper = " << render_rational(*proper, approx) << " at r = "
       << *p.mu_max_proper_r << "\n";
  os << render_per_rank_table(p, approx);
  return os.str();
}

std::string render_certificate(const StabilityCertificate& c, bool approx) {
  std::ostringstream os;
  os << "E_{" << c.a << "," << c.b << "} on P^" << c.n << ": ";
  switch (c.verdict) {
    case CertVerdict::NotCovered: os << "NOT COVERED"; break;
    case CertVerdict::SemistableForDGeq:
      os << "covered, semistable for d >= " << (c.d0 ? std::to_string(*c.d0) : "?");
      break;
    case CertVerdict::CoveredDirectSum: os << "covered (direct sum)"; break;
    case CertVerdict::CoveredNoThreshold: os << "covered, no threshold derived"; break;
  }
  os << "\n";
  os << "m = " << c.dec.m << ", j = " << c.dec.j;
  if (c.dec.s) os << ", s = " << *c.dec.s << ", l = " << *c.dec.l;
  os << "\n";
  os << "mu = " << render_rational(c.mu_coef, approx) << " d\n";
  os << "B = " << render_linear_form(c.B_coef, c.B_const, approx) << "\n";
  if (c.margin)
    os << "margin = " << render_linear_form(c.margin->alpha, c.margin->beta, approx) << "\n";
  if (c.d0) os << "d0 = " << *c.d0 << "\n";
  if (c.certified_at_d)
    os << "certified at d = " << *c.d << ": " << (*c.certified_at_d ? "yes" : "no") << "\n";
  for (const auto& w : c.warnings) os << "note: " << w << "\n";
  return os.str();
}

} // namespace syz
