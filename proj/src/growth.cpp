#include "growthcodes/growth.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <utility>

#include "growthcodes/errors.hpp"
#include "growthcodes/reedmuller.hpp"

namespace growthcodes {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kTags{{
    {Family::SeedSeries, "seed-series"},
    {Family::SeedFamily, "seed-family"},
    {Family::RmDiagonal, "rm-diagonal"},
    {Family::RmThird, "rm-third"},
    {Family::DirectSum, "direct-sum"},
    {Family::Repetition, "repetition"},
}};

GrowthRecord from_params(Family f, std::uint64_t index, const CodeParams& p, bool verified) {
  GrowthRecord rec;
  rec.family = f;
  rec.index = index;
  rec.n = p.n;
  rec.k = p.k;
  rec.d = p.d;
  rec.u = p.u;
  rec.kd_over_n = kd_over_n(p);
  rec.verified = verified;
  return rec;
}

bool within_search(const LinearCode& code, const SearchOptions& search) {
  return message_space_size(code) <= search.budget;
}

GrowthRecord seed_series_row(const GrowthQuery& q, std::uint64_t i) {
  const PrimeField field(q.field);
  const SeriesMember s = series_code(field, i, q.options);
  CodeParams p = s.params.params();
  bool verified = false;
  if (s.verified()) {
    p.d = *s.code->verified_distance();
    verified = true;
  }
  GrowthRecord rec = from_params(Family::SeedSeries, i, p, verified);
  rec.series = SeriesColumns{s.j, s.j_alternate, s.alternate_kd_over_n,
                             theorem_main_holds(i, rec.k) && rec.kd_over_n == Rational(2 * i)};
  return rec;
}

GrowthRecord seed_family_row(const GrowthQuery& q, std::uint64_t j) {
  const PrimeField field(q.field);
  const FamilyMember m = family_code(field, q.seed_i, j, q.options);
  CodeParams p = m.params.params();
  if (m.verified()) p.d = *m.code->verified_distance();
  GrowthRecord rec = from_params(Family::SeedFamily, j, p, m.verified());
  rec.seed_i = q.seed_i;
  return rec;
}

GrowthRecord rm_row(const GrowthQuery& q, Family f, std::uint64_t index) {
  RMColumns cols;
  RMParams rm;
  if (f == Family::RmDiagonal) {
    rm = rm_diagonal(index);
  } else {
    const RMThirdRecord third = rm_third_series(index);
    rm = third.rm;
    cols.asymptote_ratio = third.asymptote_ratio;
  }
  cols.m = rm.m;
  cols.r = rm.r;
  CodeParams p = rm.params;
  bool verified = false;
  if (q.options.verify && p.n <= q.options.materialize.max_coordinates &&
      p.k < 64 && ipow(2, static_cast<std::uint64_t>(p.k)) <= q.options.search.budget) {
    LinearCode code = rm_generator(rm.m, rm.r, q.options.materialize);
    p.d = min_distance_exhaustive(code, q.options.search);
    verified = true;
  }
  GrowthRecord rec = from_params(f, index, p, verified);
  rec.rm = cols;
  return rec;
}

GrowthRecord composed_row(const GrowthQuery& q, Family f, const LinearCode& base, std::uint64_t base_d,
                          std::uint64_t s) {
  LinearCode code = f == Family::DirectSum ? direct_sum(base, s) : repetition(base, s);
  CodeParams p{code.length(), code.dimension(), f == Family::DirectSum ? base_d : base_d * s, std::nullopt};
  bool verified = false;
  if (q.options.verify && within_search(code, q.options.search)) {
    p.d = min_distance_exhaustive(code, q.options.search);
    verified = true;
  }
  return from_params(f, s, p, verified);
}

}  // namespace

Family parse_family(std::string_view tag) {
  for (const auto& [f, name] : kTags) {
    if (name == tag) return f;
  }
  throw UnknownFamily("unknown family '" + std::string(tag) + "'");
}

std::string_view family_tag(Family f) noexcept {
  for (const auto& [fam, name] : kTags) {
    if (fam == f) return name;
  }
  return "?";
}

LinearCode default_base_code() {
  const PrimeField gf2(2);
  const std::vector<FieldVector> basis{FieldVector::from_ints(gf2, {1, 1, 0, 0}),
                                       FieldVector::from_ints(gf2, {0, 0, 1, 1})};
  return LinearCode(gf2, basis);
}

std::vector<GrowthRecord> growth_table(const GrowthQuery& query) {
  if (query.first > query.last) throw InvalidArgument("empty index range");
  const bool zero_ok = query.family == Family::SeedFamily || query.family == Family::RmDiagonal;
  if (query.first == 0 && !zero_ok) {
    throw InvalidArgument(std::string(family_tag(query.family)) + " indices start at 1");
  }

  std::optional<LinearCode> base;
  std::uint64_t base_d = 0;
  if (query.family == Family::DirectSum || query.family == Family::Repetition) {
    base = query.base ? *query.base : default_base_code();
    base_d = min_distance_exhaustive(*base, query.options.search);
  }

  std::vector<GrowthRecord> rows;
  rows.reserve(query.last - query.first + 1);
  for (std::uint64_t idx = query.first; idx <= query.last; ++idx) {
    switch (query.family) {
      case Family::SeedSeries: rows.push_back(seed_series_row(query, idx)); break;
      case Family::SeedFamily: rows.push_back(seed_family_row(query, idx)); break;
      case Family::RmDiagonal:
      case Family::RmThird: rows.push_back(rm_row(query, query.family, idx)); break;
      case Family::DirectSum:
      case Family::Repetition: rows.push_back(composed_row(query, query.family, *base, base_d, idx)); break;
    }
  }
  return rows;
}

bool theorem_main_holds(std::uint64_t i, const BigInt& k) {
  const BigInt two_i = 2 * BigInt(i);
  return (two_i + 1) * (two_i + 1) > k && k > two_i * two_i;
}

std::vector<TheoremMainRow> theorem_main_check(std::uint64_t i_max) {
  if (i_max == 0) throw InvalidArgument("i_max must be at least 1");
  std::vector<TheoremMainRow> rows;
  rows.reserve(i_max);
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    // K_i = k_0 + j for the (i+1) seed family, k_0 = 2i + 1.
    const BigInt k = BigInt(2 * i + 1) + family_max_step(i + 1);
    rows.push_back({i, k, theorem_main_holds(i, k)});
  }
  return rows;
}

namespace {

std::string format_ratio(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

std::vector<std::string> extra_columns(Family f) {
  switch (f) {
    case Family::SeedSeries: return {"j", "j_alternate", "alternate_kd_over_n", "theorem_main"};
    case Family::SeedFamily: return {"seed_i"};
    case Family::RmDiagonal: return {"m", "r"};
    case Family::RmThird: return {"m", "r", "asymptote_ratio"};
    default: return {};
  }
}

}  // namespace

void write_growth_csv(std::ostream& out, const std::vector<GrowthRecord>& rows) {
  out << "family,index,n,k,d,u,kd_over_n_num,kd_over_n_den,verified";
  const Family f = rows.empty() ? Family::DirectSum : rows.front().family;
  for (const auto& c : extra_columns(f)) out << ',' << c;
  out << '\n';
  for (const GrowthRecord& r : rows) {
    out << family_tag(r.family) << ',' << r.index << ',' << r.n << ',' << r.k << ',' << r.d << ',';
    if (r.u) out << *r.u;
    out << ',' << numerator(r.kd_over_n) << ',' << denominator(r.kd_over_n) << ','
        << (r.verified ? "true" : "false");
    if (r.series) {
      out << ',' << r.series->j << ',' << r.series->j_alternate << ',' << to_string(r.series->alternate_kd_over_n)
          << ',' << (r.series->theorem_main ? "true" : "false");
    }
    if (r.seed_i) out << ',' << *r.seed_i;
    if (r.rm) {
      out << ',' << r.rm->m << ',' << r.rm->r;
      if (r.rm->asymptote_ratio) out << ',' << format_ratio(*r.rm->asymptote_ratio);
    }
    out << '\n';
  }
}

nlohmann::ordered_json growth_json(const std::vector<GrowthRecord>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const GrowthRecord& r : rows) {
    nlohmann::ordered_json o;
    o["family"] = family_tag(r.family);
    o["index"] = r.index;
    o["n"] = r.n.str();
    o["k"] = r.k.str();
    o["d"] = r.d.str();
    o["u"] = r.u ? nlohmann::ordered_json(r.u->str()) : nlohmann::ordered_json(nullptr);
    o["kd_over_n_num"] = numerator(r.kd_over_n).str();
    o["kd_over_n_den"] = denominator(r.kd_over_n).str();
    o["verified"] = r.verified;
    if (r.series) {
      o["j"] = r.series->j;
      o["j_alternate"] = r.series->j_alternate;
      o["alternate_kd_over_n"] = to_string(r.series->alternate_kd_over_n);
      o["theorem_main"] = r.series->theorem_main;
    }
    if (r.seed_i) o["seed_i"] = *r.seed_i;
    if (r.rm) {
      o["m"] = r.rm->m;
      o["r"] = r.rm->r;
      // Kept as text so the value is byte-stable across JSON libraries.
      if (r.rm->asymptote_ratio) o["asymptote_ratio"] = format_ratio(*r.rm->asymptote_ratio);
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

}  // namespace growthcodes
