#include "odo/report.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "odo/groupoid.hpp"
#include "odo/homology.hpp"

namespace odo {

namespace {

const char* const kNotPrincipal = "not applicable: groupoid not essentially principal";
const char* const kDihedralOnlyK = "not applicable: K-theory is computed only for the dihedral family";

Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_entry(e);
  }
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::size_t> default_ah_levels(const OdometerSpec& spec) {
  std::vector<std::size_t> levels;
  for (std::size_t i = 1; i <= spec.depth() && levels.size() < 3; ++i) {
    const Integer n = spec.modulus(i);
    if (n > 10000) break;
    if (n >= 3) levels.push_back(i);
  }
  return levels;
}

Json error_entry(const Error& e) {
  Json out;
  out["error"] = std::string(errc_name(e.code()));
  out["message"] = e.what();
  return out;
}

// ---------------------------------------------------------------------------
// Sections

Json topfree_json(const OdometerSpec& spec) {
  const TopFreeVerdict v = is_topologically_free(spec, spec.depth());
  const ChainIntersection ci = chain_intersection(spec);
  Json out;
  out["verdict"] = std::string(verdict_name(v.kind));
  out["reason"] = v.reason;
  Json elements = Json::array();
  for (const auto& g : ci.elements) elements.push_back(g.to_string());
  out["chain_intersection"] = {{"elements", elements}, {"truncated", ci.truncated}};
  if (ci.truncated) out["chain_intersection"]["truncation_modulus"] = integer_json(ci.truncation_modulus);
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back({{"gamma", w.gamma.to_string()},
                         {"level", w.level},
                         {"b", w.b.to_string()},
                         {"conjugate", w.conjugate.to_string()}});
  out["witnesses"] = witnesses;
  if (v.counter_gamma)
    out["counterexample"] = {{"gamma", v.counter_gamma->to_string()}, {"level", v.counter_level}};
  return out;
}

Json fixed_points_json(const OdometerSpec& spec, const ReportOptions& options) {
  if (spec.group() != GroupKind::Dihedral)
    return "not applicable: fixed counts of (0,1) and (1,1) are defined for the dihedral family";
  const std::size_t d = std::min(options.fixed_depth, spec.depth());
  const std::size_t horizon = options.horizon.value_or(d + 3);
  const auto reflection = GroupElement::make(GroupKind::Dihedral, 0, true);
  const auto shifted = GroupElement::make(GroupKind::Dihedral, 1, true);
  Json out;
  out["depth"] = d;
  out["horizon"] = horizon;
  out["extendable"] = guarded([&] {
    return Json{{"(0,1)", integer_json(fixed_points_extendable(spec, reflection, d, horizon).count)},
                {"(1,1)", integer_json(fixed_points_extendable(spec, shifted, d, horizon).count)}};
  });
  out["limit"] = guarded([&] {
    const auto [a, b] = dihedral_fixed_counts(spec);
    return Json{{"(0,1)", integer_json(a)}, {"(1,1)", integer_json(b)}};
  });
  return out;
}

Json homology_json(const HomologyReport& h) {
  Json degrees;
  for (const auto& [n, g] : h.degrees) degrees[std::to_string(n)] = g.to_string();
  Json out;
  out["max_degree"] = h.max_degree;
  out["degrees"] = degrees;
  if (h.h1_stabilization_depth > 0) out["h1_stabilization_level"] = h.h1_stabilization_depth;
  return out;
}

Json ktheory_json(const KTheoryReport& k) {
  Json out;
  out["K0"] = render_k0(k);
  out["K1"] = render_group(k.k1);
  out["fixed_points"] = Json::array({integer_json(k.m01), integer_json(k.m11)});
  return out;
}

Json hk_json(const HkVerdict& v) {
  auto side = [](const HkSide& s) {
    return Json{{"verdict", s.match ? "match" : "mismatch"},
                {"K", s.k_side},
                {"H", s.h_side},
                {"details", s.details}};
  };
  return Json{{"k0_vs_even", side(v.k0_vs_even)}, {"k1_vs_odd", side(v.k1_vs_odd)}};
}

Json ah_json(const AhCertificate& cert) {
  Json out;
  if (cert.level) out["level"] = *cert.level;
  else out["level"] = "colimit";
  out["exact"] = cert.exact;
  if (cert.split) out["split"] = *cert.split;
  else out["split"] = nullptr;
  const std::string a = render_group(cert.h0_tensor_z2);
  const std::string b = render_group(cert.fullgroup_ab);
  const std::string c = render_group(cert.h1);
  out["groups"] = Json::array({a, b, c});
  out["maps"] = Json::array({Json{{"name", "j"}, {"from", a}, {"to", b}, {"matrix", matrix_json(cert.j)}},
                             Json{{"name", "I"}, {"from", b}, {"to", c}, {"matrix", matrix_json(cert.index_map)}}});
  out["checks"] = {{"j_injective", cert.j_injective},
                   {"im_j_equals_ker_I", cert.middle_exact},
                   {"I_surjective", cert.index_surjective}};
  if (!cert.level) {
    out["checks"]["naturality"] = cert.natural;
    out["stabilization_level"] = cert.stabilization_depth;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Json run_report(const OdometerSpec& spec, const ReportOptions& options) {
  const bool principal = spec.group() != GroupKind::DirectProduct;
  const bool dihedral = spec.group() == GroupKind::Dihedral;
  Json r;
  r["spec"] = serialize_spec(spec);
  r["topological_freeness"] = guarded([&] { return topfree_json(spec); });
  if (!principal) {
    for (const char* key : {"fixed_points", "homology", "ktheory", "hk", "ah"}) r[key] = kNotPrincipal;
    return r;
  }
  r["fixed_points"] = guarded([&] { return fixed_points_json(spec, options); });
  r["homology"] = guarded(
      [&] { return homology_json(odometer_homology(spec, options.max_degree, options.window)); });
  if (dihedral) {
    r["ktheory"] = guarded([&] { return ktheory_json(k_theory_dihedral(spec)); });
    r["hk"] = guarded([&] { return hk_json(hk_compare(spec, options.window)); });
  } else {
    r["ktheory"] = kDihedralOnlyK;
    r["hk"] = kDihedralOnlyK;
  }
  Json ah = Json::array();
  const auto levels = options.ah_levels.empty() ? default_ah_levels(spec) : options.ah_levels;
  for (auto level : levels) ah.push_back(guarded([&] { return ah_json(ah_certificate(spec, level)); }));
  if (options.ah_colimit) {
    if (dihedral) ah.push_back(guarded([&] { return ah_json(ah_certificate_colimit(spec, options.window)); }));
    else ah.push_back("not applicable: the colimit certificate is implemented for the dihedral family");
  }
  r["ah"] = ah;
  return r;
}

Json hk_check(const OdometerSpec& spec, const ReportOptions& options) {
  const HkVerdict v = hk_compare(spec, options.window);
  Json r;
  r["spec"] = serialize_spec(spec);
  r["ktheory"] = ktheory_json(k_theory_dihedral(spec));
  r["homology"] = homology_json(odometer_homology(spec, options.max_degree, options.window));
  r["hk"] = hk_json(v);
  return r;
}

Json ah_check(const OdometerSpec& spec, const ReportOptions& options) {
  Json certs = Json::array();
  for (auto level : options.ah_levels) certs.push_back(ah_json(ah_certificate(spec, level)));
  if (options.ah_colimit) certs.push_back(ah_json(ah_certificate_colimit(spec, options.window)));
  return Json{{"spec", serialize_spec(spec)}, {"certificates", certs}};
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

Json status_entry(const std::string& name, bool agree) {
  return Json{{"name", name}, {"status", agree ? "agree" : "disagree"}};
}

Json skipped(const std::string& name, const std::string& why) {
  return Json{{"name", name}, {"status", "skipped"}, {"reason", why}};
}

Json run_oracle(const std::string& name, const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::InvariantViolation)
      return Json{{"name", name}, {"status", "disagree"}, {"reason", e.what()}};
    return skipped(name, std::string(errc_name(e.code())) + ": " + e.what());
  }
}

// Reflection (t, 1) on Z_n fixes x iff t - x ≡ x.
std::vector<unsigned long> reflection_fixed(unsigned long t, unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long x = 0; x < n; ++x)
    if ((t % n + n - x) % n == x) out.push_back(x);
  return out;
}

std::size_t negation_fixed(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t x = 0; x < n; ++x) c += (2 * x) % n == 0;
  return c;
}

FgAbelianGroup z2_power(std::size_t r) {
  return FgAbelianGroup::from_invariants(0, std::vector<Integer>(r, Integer(2)));
}

}  // namespace

Json run_oracles(const OdometerSpec& spec, std::size_t depth) {
  const bool dihedral = spec.group() == GroupKind::Dihedral;
  const std::size_t d = spec.tail().is_geometric() ? depth : std::min(depth, spec.depth());
  const OdometerSpec s = spec.deepened(std::max<std::size_t>(d, 1));
  Json oracles = Json::array();

  oracles.push_back(run_oracle("fixed_points", [&]() -> Json {
    const std::string name = "fixed_points";
    if (!dihedral) return skipped(name, "reflections exist only in the dihedral family");
    if (!spec.tail().is_geometric()) return skipped(name, "the limit count needs a geometric tail");
    const std::size_t level = std::min<std::size_t>(d, 3);
    const std::size_t horizon = level + 3;
    const OdometerSpec deep = spec.deepened(std::max(horizon, spec.depth()));
    const Integer top = deep.modulus(horizon);
    if (top > kMaterializeLimit) return skipped(name, "n_D exceeds the enumeration budget");
    const unsigned long nd = deep.modulus(level).get_ui();
    const auto [m01, m11] = dihedral_fixed_counts(spec);
    Json e = status_entry(name, true);
    bool agree = true;
    Json brute = Json::array();
    for (unsigned long t : {0UL, 1UL}) {
      std::vector<unsigned long> proj;
      for (auto x : reflection_fixed(t, top.get_ui())) proj.push_back(x % nd);
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      const auto lib = fixed_points_extendable(deep, GroupElement::make(GroupKind::Dihedral, t, true),
                                               level, horizon);
      const Integer closed = t == 0 ? m01 : m11;
      agree = agree && lib.count == proj.size() && closed == proj.size();
      brute.push_back(proj.size());
    }
    e["status"] = agree ? "agree" : "disagree";
    e["level"] = level;
    e["horizon"] = horizon;
    e["closed_form"] = Json::array({integer_json(m01), integer_json(m11)});
    e["brute_force"] = brute;
    return e;
  }));

  oracles.push_back(run_oracle("involution_homology", [&]() -> Json {
    const std::string name = "involution_homology";
    if (!dihedral) return skipped(name, "negation modules arise from the dihedral family");
    bool agree = true;
    Json checked = Json::array();
    for (std::size_t i = 1; i <= d; ++i) {
      const Integer n = s.modulus(i);
      if (n > 200) break;
      const std::size_t m = n.get_ui();
      const auto module = InvolutionModule::negation(m);
      const auto expected = z2_power(negation_fixed(m));
      agree = agree && z2_homology(module, 1) == expected && z2_homology(module, 3) == expected &&
              z2_homology(module, 2).is_trivial();
      checked.push_back(m);
    }
    if (checked.empty()) return skipped(name, "every n_i exceeds 200");
    Json e = status_entry(name, agree);
    e["moduli"] = checked;
    return e;
  }));

  oracles.push_back(run_oracle("groupoid_chain_complex", [&]() -> Json {
    const std::string name = "groupoid_chain_complex";
    if (!dihedral) return skipped(name, "negation groupoids arise from the dihedral family");
    std::size_t n = 0;
    for (std::size_t i = 1; i <= d && s.modulus(i) <= 12; ++i) n = s.modulus(i).get_ui();
    if (n == 0) return skipped(name, "no level with n_i <= 12");
    const auto g = FiniteGroupoid::negation(n);
    const std::size_t fixed = negation_fixed(n);
    bool agree = groupoid_chain_homology(g, 0) == FgAbelianGroup::free((n + fixed) / 2);
    for (std::size_t k = 1; k <= 3; ++k)
      agree = agree && groupoid_chain_homology(g, k) == (k % 2 == 1 ? z2_power(fixed) : FgAbelianGroup{});
    Json e = status_entry(name, agree);
    e["n"] = n;
    e["degrees"] = "0-3";
    return e;
  }));

  oracles.push_back(run_oracle("coinvariants", [&]() -> Json {
    const std::string name = "coinvariants";
    if (!dihedral) return skipped(name, "the involution (0,1) exists only in the dihedral family");
    Json checked = Json::array();
    for (std::size_t i = 1; i <= d && s.modulus(i) <= 200; ++i) {
      const auto c = coinvariants_with_involution(s, i);
      if (c.group != FgAbelianGroup::free(1))
        return Json{{"name", name}, {"status", "disagree"}, {"level", i}};
      checked.push_back(i);
    }
    if (checked.empty()) return skipped(name, "every n_i exceeds 200");
    Json e = status_entry(name, true);
    e["levels"] = checked;
    return e;
  }));

  oracles.push_back(run_oracle("transfer_transversal_independence", [&]() -> Json {
    const std::string name = "transfer_transversal_independence";
    if (d < 2) return skipped(name, "needs two levels");
    std::mt19937_64 rng(20240601);
    bool agree = true;
    for (std::size_t i = 1; i < d; ++i) {
      const AbHom canonical = transfer_map(s, i, 1);
      const Integer ni = s.modulus(i);
      const Integer nj = s.modulus(i + 1);
      const std::size_t r = materialized_size(nj / ni, "transversal");
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<GroupElement> reps;
        for (std::size_t k = 0; k < r; ++k) {
          const long shift = static_cast<long>(rng() % 7) - 3;
          const bool flip = spec.group() != GroupKind::Z && rng() % 2 == 1;
          reps.push_back(GroupElement::make(spec.group(),
                                            ni * static_cast<unsigned long>(k) + nj * shift, flip));
        }
        agree = agree && transfer_between(s, i, i + 1, 1, reps).equals(canonical);
      }
    }
    return status_entry(name, agree);
  }));

  oracles.push_back(run_oracle("transfer_transitivity", [&]() -> Json {
    const std::string name = "transfer_transitivity";
    if (d < 3) return skipped(name, "needs three levels");
    bool agree = true;
    for (std::size_t i = 1; i + 2 <= d; ++i)
      agree = agree && transfer_between(s, i, i + 2, 1)
                           .equals(compose(transfer_map(s, i + 1, 1), transfer_map(s, i, 1)));
    return status_entry(name, agree);
  }));

  oracles.push_back(run_oracle("h1_equals_h3", [&]() -> Json {
    const std::string name = "h1_equals_h3";
    if (!dihedral) return skipped(name, "odd degrees above 1 vanish outside the dihedral family");
    if (!spec.tail().is_geometric()) return skipped(name, "homology needs a geometric tail");
    const HomologyReport h = odometer_homology(spec, 3);
    Json e = status_entry(name, iso_equal(h.degrees.at(1), h.degrees.at(3)));
    e["H1"] = h.degrees.at(1).to_string();
    e["H3"] = h.degrees.at(3).to_string();
    return e;
  }));

  return Json{{"spec", serialize_spec(spec)}, {"depth", d}, {"oracles", oracles}};
}

// ---------------------------------------------------------------------------

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const Json& v) {
  return v.is_array() &&
         std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
}

std::string flat_text(const Json& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + scalar_text(v[k]);
  return out + "]";
}

void render_into(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (is_flat_array(val)) {
        out << pad << key << ": " << flat_text(val) << "\n";
      } else if (val.is_structured() && !val.empty()) {
        out << pad << key << ":\n";
        render_into(out, val, indent + 1);
      } else {
        out << pad << key << ": " << scalar_text(val) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (is_flat_array(item)) {
        out << pad << "- " << flat_text(item) << "\n";
      } else if (item.is_structured()) {
        out << pad << "-\n";
        render_into(out, item, indent + 1);
      } else {
        out << pad << "- " << scalar_text(item) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render_into(out, report, 0);
  return out.str();
}

}  // namespace odo
