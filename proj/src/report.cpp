#include "hilbnef/report.hpp"

#include "hilbnef/weyl.hpp"

#include <map>

namespace hilbnef::report {

namespace bl = bridgeland;

namespace {

Json wall_json(const std::variant<bl::Wall, bl::DegenerateLocus>& w) {
  if (const auto* wall = std::get_if<bl::Wall>(&w))
    return Json{{"center", rational_to_json(wall->center)},
                {"radius_sq", rational_to_json(wall->radius_sq)},
                {"nonempty", wall->nonempty()}};
  return Json{{"degenerate", std::get<bl::DegenerateLocus>(w).reason}};
}

Json hilb_divisor_json(const hilb::HilbDivisor& d) {
  return Json{{"surf", divisor_to_json(d.surf)}, {"b_half", rational_to_json(d.b_half)}, {"label", hilb::divisor_label(d)}};
}

Json candidate_json(const bl::Rank1Candidate& c) {
  Json j{{"minus_L", format_divisor(c.minus_l)},
         {"fiber_degree", rational_to_json(c.fiber_degree)},
         {"a_degree", rational_to_json(c.a_degree)},
         {"filter", bl::to_string(c.filter)},
         {"wall", wall_json(c.wall)}};
  if (c.wall_with_point) j["wall_with_point"] = wall_json(*c.wall_with_point);
  return j;
}

Json gieseker_summary_json(const bl::GiesekerCertificate& cert) {
  std::map<std::string, std::size_t> by_filter;
  Json survivors = Json::array();
  for (const auto& c : cert.candidates) {
    ++by_filter[bl::to_string(c.filter)];
    if (c.filter == bl::Filter::Survivor) survivors.push_back(candidate_json(c));
  }
  Json filters = Json::object();
  for (const auto& [k, v] : by_filter) filters[k] = v;
  return Json{{"slice", bl::to_string(cert.slice)},
              {"n", cert.n},
              {"max_h_degree", cert.max_h_degree},
              {"fiber_wall", wall_json(cert.fiber_wall)},
              {"rank2_radius_bound", rational_to_json(cert.rank2_bound)},
              {"candidate_count", cert.candidates.size()},
              {"filter_counts", filters},
              {"survivors", survivors},
              {"violations", cert.violations},
              {"certified", cert.certified()}};
}

Rational a1_sq_printed(int n) { return Rational(10 * n * n, 9) - Rational(3 * n, 2); }

}  // namespace

Json orbit_json(const Divisor& start, int max_h_degree, const std::vector<Divisor>& orbit) {
  Json classes = Json::array();
  for (const Divisor& d : orbit) classes.push_back(divisor_to_json(d));
  Json counts = Json::object();
  for (const auto& [deg, k] : weyl::count_by_degree(orbit)) counts[std::to_string(deg)] = k;
  return Json{{"start", divisor_to_json(start)},
              {"max_degree", max_h_degree},
              {"count", orbit.size()},
              {"counts_by_degree", counts},
              {"classes", classes}};
}

Json nef_certificate_json(const Divisor& d, const surface::NefCertificate& cert) {
  Json checked = Json::array();
  for (const auto& p : cert.checked)
    checked.push_back(Json{{"curve", format_divisor(p.curve)}, {"pairing", rational_to_json(p.value)}});
  Json j{{"divisor", divisor_to_json(d)},
         {"degree_bound", cert.degree_bound},
         {"verdict", cert.nef_up_to_bound() ? "NefUpToBound" : "NotNef"},
         {"checked", checked}};
  if (cert.witness)
    j["witness"] = Json{{"curve", format_divisor(cert.witness->curve)},
                        {"class", divisor_to_json(cert.witness->curve)},
                        {"pairing", rational_to_json(cert.witness->value)}};
  return j;
}

Json ample_json(const std::string& which, int n, const surface::AmpleDecision& dec) {
  return Json{{"which", which},
              {"n", n},
              {"ample", dec.ample},
              {"dot_fiber", rational_to_json(dec.dot_fiber)},
              {"dot_e1", rational_to_json(dec.dot_e1)},
              {"dot_ei", rational_to_json(dec.dot_ei)},
              {"min_higher", dec.min_higher ? Json(rational_to_json(*dec.min_higher)) : Json("-infinity")},
              {"self_intersection", rational_to_json(dec.self_intersection)},
              {"trace", dec.trace}};
}

Json theorem_json(const hilb::TheoremReport& rep, bool full_pairings) {
  Json curves = Json::array();
  for (const auto& c : rep.curves) {
    curves.push_back(Json{{"curve", c.curve},
                          {"min_pairing", rational_to_json(c.min_pairing)},
                          {"min_divisor", c.min_divisor},
                          {"orthogonal_witness", c.orthogonal_witness ? Json(*c.orthogonal_witness) : Json()}});
  }
  auto violations = [](const std::vector<hilb::PairingViolation>& vs) {
    Json a = Json::array();
    for (const auto& v : vs)
      a.push_back(Json{{"divisor", v.divisor}, {"curve", v.curve}, {"pairing", rational_to_json(v.value)}});
    return a;
  };
  Json j{{"n", rep.n},
         {"max_h_degree", rep.max_h_degree},
         {"nef_generators", rep.nef_generator_count},
         {"curve_generators", rep.curve_generator_count},
         {"minus_one_classes", rep.minus_one_class_count},
         {"pairings_checked", rep.pairings_checked},
         {"negative_pairings", violations(rep.negative_pairings)},
         {"curves_without_witness", rep.curves_without_witness},
         {"epsilon_not_fiber_orthogonal", violations(rep.epsilon_not_fiber_orthogonal)},
         {"curves", curves},
         {"notes", rep.notes},
         {"ok", rep.ok()}};
  if (full_pairings) {
    Json pairs = Json::array();
    const auto nefs = hilb::nef_generators(rep.n, rep.max_h_degree);
    const auto cs = hilb::curve_generators(rep.max_h_degree);
    for (const auto& g : nefs)
      for (const auto& c : cs)
        pairs.push_back(Json{{"divisor", g.label},
                             {"curve", c.label},
                             {"pairing", rational_to_json(hilb::pair_hilb(g.cls, c.curve, rep.n))}});
    j["pairings"] = std::move(pairs);
  }
  return j;
}

Json gieseker_json(const bl::GiesekerCertificate& cert) {
  Json j = gieseker_summary_json(cert);
  Json all = Json::array();
  for (const auto& c : cert.candidates) all.push_back(candidate_json(c));
  j["candidates"] = std::move(all);
  return j;
}

Json coverage_json(const coneconj::CoverageReport& rep) {
  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    Json steps = Json::array();
    for (const auto& st : s.steps)
      steps.push_back(Json{{"section", format_divisor(st.section)},
                           {"h_before", rational_to_json(st.h_before)},
                           {"h_after", rational_to_json(st.h_after)}});
    Json js{{"index", s.index},
            {"original", hilb_divisor_json(s.original)},
            {"reduced", hilb_divisor_json(s.reduced)},
            {"steps", steps},
            {"stalled", s.stalled},
            {"ok", s.ok()}};
    if (s.decomposition) {
      js["nef_part"] = format_divisor(s.decomposition->nef_part);
      js["t"] = rational_to_json(s.decomposition->t);
      js["nef_part_orbit"] = weyl::to_string(weyl::classify_nef_extremal(s.decomposition->nef_part));
      if (s.decomposition->nef_check.witness)
        js["nef_witness"] = format_divisor(s.decomposition->nef_check.witness->curve);
    }
    if (!s.error.empty()) js["error"] = s.error;
    samples.push_back(std::move(js));
  }
  return Json{{"n", rep.n},
              {"max_h_degree", rep.max_h_degree},
              {"seed", rep.seed},
              {"h_threshold", rational_to_json(rep.h_threshold)},
              {"generating_translations", rep.generating_translations},
              {"sample_count", rep.samples.size()},
              {"successes", rep.successes()},
              {"samples", samples}};
}

std::vector<DiscrepancyRow> discrepancy_table(int n) {
  using bl::PaperSlice;
  std::vector<DiscrepancyRow> rows;
  const Rational nq(n);
  const bl::Slice s1 = bl::make_slice(PaperSlice::A1, n);
  const bl::Slice s2 = bl::make_slice(PaperSlice::A2, n);
  const bl::ChernChar ideal = bl::ideal_sheaf(n);
  const Rational a1_sq = self_intersection(s1.A);

  auto oracle_wall = [&](const bl::Slice& sl, const Divisor& minus_l) {
    return std::get<bl::Wall>(bl::wall_oracle(sl, bl::line_bundle(-minus_l), ideal));
  };
  const bl::Wall fiber1 = oracle_wall(s1, lattice::F());

  {
    const Divisor beta = lattice::E(1) - lattice::E(2);
    const Divisor d = lattice::E(1);
    const Divisor printed = d + intersect(d, beta) * d;
    rows.push_back({"reflection image self-intersection, s(E1) for beta = E1-E2", "", n,
                    "D + (D.beta) D", self_intersection(printed), "D + (D.beta) beta",
                    self_intersection(weyl::reflect(Root(beta), d)), std::nullopt, std::nullopt});
  }
  const Rational printed_a1 = a1_sq_printed(n);
  const Rational printed_bound = (2 * nq * printed_a1 + nq * nq) / (8 * printed_a1 * printed_a1);
  const Rational printed_rho_sq = 1 + 3 * nq / printed_a1;
  rows.push_back({"A1 self-intersection", "A1", n, "10n^2/9 - 3n/2", printed_a1, "lattice expansion (19n^2/9 - 3n)",
                  a1_sq, std::nullopt, std::nullopt});
  rows.push_back({"fiber wall radius^2", "A1", n, "1 + 3n/A1^2 with A1^2 = 10n^2/9 - 3n/2", printed_rho_sq,
                  "central-charge oracle", fiber1.radius_sq, bl::rank2_radius_bound(s1, n) < fiber1.radius_sq,
                  printed_bound < printed_rho_sq});
  rows.push_back({"rank >= 2 radius^2 bound", "A1", n, "bound evaluated with printed A1^2", printed_bound,
                  "bound evaluated with lattice A1^2", bl::rank2_radius_bound(s1, n),
                  bl::rank2_radius_bound(s1, n) < fiber1.radius_sq, printed_bound < printed_rho_sq});

  auto center_row = [&](const std::string& item, PaperSlice which, const bl::Slice& sl, const std::string& printed_expr,
                        const Rational& printed, const Divisor& minus_l) {
    const bl::Wall w = oracle_wall(sl, minus_l);
    rows.push_back({item, bl::to_string(which), n, printed_expr, printed, "central-charge oracle", w.center,
                    w.center >= -1, printed >= -1});
  };
  const Rational n_m_32 = nq - Rational(3, 2);
  center_row("E_i wall center", PaperSlice::A1, s1, "-(n-1)/(n-3/2)", -(nq - 1) / n_m_32, lattice::E(2));
  center_row("E_1 wall center", PaperSlice::A2, s2, "-2/3", Rational(-2, 3), lattice::E(1));
  center_row("E_i (i>=2) wall center", PaperSlice::A2, s2, "-(n-1)/(n-3/2)", -(nq - 1) / n_m_32, lattice::E(2));
  center_row("H-E_i-E_j wall center", PaperSlice::A1, s1, "-(n-1)/(4n/3-3/2)",
             -(nq - 1) / (Rational(4, 3) * nq - Rational(3, 2)), lattice::H() - lattice::E(2) - lattice::E(3));
  center_row("H-E_1-E_i wall center", PaperSlice::A2, s2, "-(n-1)/(n-3/2)", -(nq - 1) / n_m_32,
             lattice::H() - lattice::E(1) - lattice::E(2));

  {
    const Rational attained = intersect(Divisor(lattice::H() - lattice::E(1)), s2.A);
    rows.push_back({"smallest (-L).A2 with (-L).F >= 2", "A2", n, "2n - 3/2", 2 * nq - Rational(3, 2),
                    "(H-E1).A2 = 2n - 3", attained, attained >= nq, 2 * nq - Rational(3, 2) >= nq});
  }
  rows.push_back({"second nefness argument", "A2", n, "eps(H-E2)", std::nullopt, "eps(H-E1)", std::nullopt,
                  std::nullopt, std::nullopt});
  rows.push_back({"line-count inequality for a = b_1", "A2", n, "a <= sum_{i>=2} b_i", std::nullopt,
                  "sum_{i>=2} b_i <= a", std::nullopt, std::nullopt, std::nullopt});
  return rows;
}

Json discrepancy_json(const std::vector<DiscrepancyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j{{"item", r.item},
           {"slice", r.slice},
           {"n", r.n},
           {"printed_expression", r.printed_expression},
           {"printed_value", r.printed_value ? Json(rational_to_json(*r.printed_value)) : Json()},
           {"recomputed_expression", r.recomputed_expression},
           {"recomputed_value", r.recomputed_value ? Json(rational_to_json(*r.recomputed_value)) : Json()},
           {"dominance_holds", r.dominance_holds ? Json(*r.dominance_holds) : Json()},
           {"printed_dominance_holds", r.printed_dominance_holds ? Json(*r.printed_dominance_holds) : Json()}};
    out.push_back(std::move(j));
  }
  return out;
}

CampaignResult run_campaign(const Campaign& c) {
  CampaignResult result;
  auto usage = [&](const std::string& msg) {
    result.exit_code = kUsage;
    result.report = Json{{"error", msg}};
    return result;
  };
  if (c.n_min < 3) return usage("n must be >= 3");
  if (c.n_max < c.n_min) return usage("empty n range");
  if (c.n_max > c.n_cap) return usage("n range exceeds the configured maximum " + std::to_string(c.n_cap));
  if (c.max_h_degree < 0) return usage("degree bound must be >= 0");
  if (c.slices.empty()) return usage("no slices selected");

  bool all_ok = true;
  Json per_n = Json::array();
  for (int n = c.n_min; n <= c.n_max; ++n) {
    Json entry{{"n", n}};
    const auto a1 = surface::ample_a1(n);
    const auto a2 = surface::ample_a2(n);
    entry["ample"] = Json::array({ample_json("A1", n, a1), ample_json("A2", n, a2)});
    all_ok = all_ok && a1.ample && a2.ample;

    Json walls = Json::array();
    Json nef_classes = Json::array();
    for (const auto which : c.slices) {
      const auto cert = bl::scan_gieseker_wall(which, n, c.max_h_degree);
      walls.push_back(gieseker_summary_json(cert));
      all_ok = all_ok && cert.certified();

      const bl::Slice sl = bl::make_slice(which, n);
      const hilb::HilbDivisor from_wall = bl::nef_from_wall(sl, cert.fiber_wall.center);
      const Divisor ray = which == bl::PaperSlice::A1 ? Divisor(lattice::H())
                                                      : Divisor(lattice::H() - lattice::E(1));
      const hilb::HilbDivisor eps = hilb::epsilon(ray, n);
      const bool match = from_wall == eps;
      all_ok = all_ok && match;
      nef_classes.push_back(Json{{"slice", bl::to_string(which)},
                                 {"s_W", rational_to_json(cert.fiber_wall.center)},
                                 {"nef_class", hilb_divisor_json(from_wall)},
                                 {"epsilon", hilb_divisor_json(eps)},
                                 {"equal", match}});
    }
    entry["gieseker_walls"] = std::move(walls);
    entry["nef_from_wall"] = std::move(nef_classes);

    const auto thm = hilb::theorem1_check(n, c.max_h_degree);
    all_ok = all_ok && thm.ok();
    Json thm_json = theorem_json(thm);
    thm_json.erase("curves");
    entry["theorem"] = std::move(thm_json);
    entry["discrepancies"] = discrepancy_json(discrepancy_table(n));
    per_n.push_back(std::move(entry));
  }

  Json slices = Json::array();
  for (auto s : c.slices) slices.push_back(bl::to_string(s));
  result.exit_code = all_ok ? kCertified : kFalsified;
  result.report = Json{{"campaign", Json{{"n_min", c.n_min},
                                         {"n_max", c.n_max},
                                         {"max_h_degree", c.max_h_degree},
                                         {"slices", slices}}},
                       {"certified", all_ok},
                       {"results", per_n}};
  return result;
}

}  // namespace hilbnef::report
