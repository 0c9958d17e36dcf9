#include "eicat/commands.hpp"

#include "eicat/burnside.hpp"
#include "eicat/corpus.hpp"
#include "eicat/errors.hpp"
#include "eicat/leinster.hpp"
#include "eicat/moebius.hpp"
#include "eicat/orbitcat.hpp"

#include <filesystem>
#include <random>
#include <sstream>

namespace eicat {

namespace {

Json witness_json(const FiniteCategory& cat, const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json::array({cat.morphism(w->first).name, cat.morphism(w->second).name});
}

Json predicates_json(const FiniteCategory& cat, const PredicateReport& r) {
  Json j;
  j["is_ei"] = r.is_ei;
  j["is_directly_finite"] = r.is_directly_finite;
  j["is_cauchy_complete"] = r.is_cauchy_complete;
  j["is_free"] = r.is_free;
  j["is_skeletal"] = r.is_skeletal;
  j["is_groupoid"] = r.is_groupoid;
  j["is_connected_groupoid"] = r.is_connected_groupoid;
  j["has_trivial_endomorphisms"] = r.has_trivial_endomorphisms;
  j["has_nonidentity_idempotent"] = r.has_nonidentity_idempotent;
  Json w = Json::object();
  auto put = [&](const char* key, const std::optional<Witness>& v) {
    if (v) w[key] = witness_json(cat, v);
  };
  put("is_ei", r.ei_witness);
  put("is_directly_finite", r.directly_finite_witness);
  put("is_cauchy_complete", r.cauchy_complete_witness);
  put("is_free", r.free_witness);
  put("is_skeletal", r.skeletal_witness);
  put("is_groupoid", r.groupoid_witness);
  put("is_connected_groupoid", r.connected_groupoid_witness);
  put("has_trivial_endomorphisms", r.trivial_endo_witness);
  put("has_nonidentity_idempotent", r.idempotent_witness);
  j["witnesses"] = std::move(w);
  return j;
}

Json violations_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back({{"kind", v.kind}, {"message", v.message}});
  return arr;
}

CommandResult failure(int code, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.output = Json{{"error", message}};
  r.error = message;
  return r;
}

template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const InternalAssertion& e) {
    return failure(kExitInternal, std::string("internal assertion: ") + e.what());
  } catch (const SchemaError& e) {
    return failure(kExitInvalid, std::string("schema error: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure(kExitInvalid, std::string("malformed JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    return failure(kExitInvalid, e.what());
  } catch (const std::invalid_argument& e) {
    return failure(kExitUsage, e.what());
  } catch (const std::runtime_error& e) {
    return failure(kExitUsage, e.what());
  }
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
}

Json rational_list(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

bool looks_like_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

struct LoadedGroup {
  FiniteGroup group;
  std::string source;
  std::string digest;
};

LoadedGroup load_group(const std::string& arg, std::size_t cap) {
  LoadedGroup g;
  if (looks_like_file(arg)) {
    const std::string text = read_file(arg);
    g.group = group_from_json(parse_document(text));
    if (g.group.order() > cap) throw std::invalid_argument("group order exceeds cap " + std::to_string(cap));
    g.source = arg;
    g.digest = sha256_hex(text);
  } else {
    g.group = build_group(arg, cap);
    g.source = arg;
    g.digest = sha256_hex(arg);
  }
  return g;
}

Json classes_json(const std::vector<SubgroupClass>& classes) {
  Json arr = Json::array();
  const auto labels = class_labels(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    arr.push_back({{"label", labels[i]},
                   {"representative", classes[i].representative},
                   {"order", classes[i].representative.size()},
                   {"conjugates", classes[i].conjugates.size()},
                   {"weyl_order", classes[i].weyl_order}});
  }
  return arr;
}

std::vector<BigInt> parse_xi(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("malformed xi '" + text + "'");
    const Rational r = Rational::parse(item.substr(b, e - b + 1));
    if (!r.is_integer()) throw std::invalid_argument("xi entries must be integers");
    out.push_back(r.numerator());
  }
  if (out.empty()) throw std::invalid_argument("empty xi");
  return out;
}

}  // namespace

std::string render(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

CommandResult cmd_validate(const std::string& path) {
  return guarded([&] {
    const std::string text = read_file(path);
    const CategoryData d = category_data_from_json(parse_document(text));
    const auto vs = validate(d);
    CommandResult r;
    r.output = Json{{"command", "validate"},
                    {"version", kReportVersion},
                    {"input", {{"path", path}, {"sha256", sha256_hex(text)}}},
                    {"valid", vs.empty()},
                    {"violations", violations_json(vs)}};
    if (!vs.empty()) {
      r.exit_code = kExitInvalid;
      r.error = violations_json(vs).dump();
    }
    return r;
  });
}

CommandResult euler_report(const Json& category_json, const std::string& digest, const EulerOptions& opts) {
  return guarded([&] {
    const CategoryData d = category_data_from_json(category_json);
    const auto vs = validate(d);
    if (!vs.empty()) {
      CommandResult r = failure(kExitInvalid, "invalid category");
      r.output["violations"] = violations_json(vs);
      r.error = violations_json(vs).dump();
      return r;
    }
    const FiniteCategory cat = FiniteCategory::from_data(d);
    const PredicateReport pred = classify(cat);
    Json inv = Json::object();
    Json absent = Json::object();
    Json warnings = Json::array();

    inv["zeta"] = matrix_to_json(zeta_matrix(cat));
    const WeightingResult w = weighting(cat);
    const WeightingResult cw = coweighting(cat);
    if (w.weighting) {
      inv["weighting"] = vector_to_json(*w.weighting);
      inv["weighting_kernel_dim"] = w.kernel_dim;
    } else {
      absent["weighting"] = "zeta system has no solution";
    }
    if (cw.weighting) {
      inv["coweighting"] = vector_to_json(*cw.weighting);
      inv["coweighting_kernel_dim"] = cw.kernel_dim;
    } else {
      absent["coweighting"] = "transposed zeta system has no solution";
    }
    if (const auto l = chi_L(cat)) {
      inv["chi_L"] = l->to_string();
    } else {
      absent["chi_L"] = "undefined: needs both a weighting and a coweighting";
    }
    if (const auto ml = leinster_moebius(cat)) {
      inv["leinster_moebius"] = matrix_to_json(*ml);
    } else {
      absent["leinster_moebius"] = "zeta matrix is singular";
    }
    if (opts.cells_path) {
      const auto cells = cells_from_json(parse_document(read_file(*opts.cells_path)));
      const auto cwgt = weighting_from_cells(cat, cells);
      inv["weighting_from_cells"] = vector_to_json(cwgt.k);
      inv["weighting_from_cells_verified"] = cwgt.verified;
    }

    const char* ei_keys[] = {"iso_classes", "omega_bar2", "mu_bar2", "chi_f", "chi", "chi_f2", "chi2",
                             "chi_nerve", "chi_f2_via_eta", "inversion_identity"};
    if (pred.is_ei) {
      const IsoPoset p = iso_order(cat);
      Json classes = Json::array();
      for (std::size_t i = 0; i < p.size(); ++i) {
        Json members = Json::array();
        for (int x : p.members[i]) members.push_back(cat.object_name(x));
        classes.push_back({{"label", p.labels[i]},
                           {"members", std::move(members)},
                           {"length", p.length[i]},
                           {"aut_order", p.aut[i].morphisms.size()}});
      }
      inv["iso_classes"] = std::move(classes);
      const QMatrix omega = omega_bar2(cat, p);
      ChainOptions copts;
      copts.max_chain_length = opts.max_chain_length;
      const EulerReport rep = euler_characteristics(cat, copts);
      inv["omega_bar2"] = matrix_to_json(omega);
      inv["mu_bar2"] = matrix_to_json(rep.mu_bar2);
      inv["chi_f"] = vector_to_json(rep.chi_f);
      inv["chi"] = rep.chi.to_string();
      inv["chi_f2"] = vector_to_json(rep.chi_f2);
      inv["chi2"] = rep.chi2.to_string();
      if (rep.chi_nerve) {
        inv["chi_nerve"] = rep.chi_nerve->get_str();
      } else {
        absent["chi_nerve"] = "nontrivial endomorphism present";
      }
      for (const auto& s : rep.warnings) warnings.push_back(s);
      const bool inverse = (rep.mu_bar2 * omega).is_identity();
      inv["inversion_identity"] = inverse;
      if (pred.is_free) {
        if (!inverse && !opts.max_chain_length) throw InternalAssertion("mu_bar2 * omega_bar2 != I on a free EI-category");
        inv["chi_f2_via_eta"] = vector_to_json(chi_f2_via_eta(cat));
      } else {
        absent["chi_f2_via_eta"] = "category is not free";
      }
    } else {
      const std::string reason = "not an EI-category: " + cat.morphism(pred.ei_witness->first).name +
                                 " is a non-invertible endomorphism";
      for (const char* k : ei_keys) absent[k] = reason;
    }
    if (pred.is_skeletal && pred.has_trivial_endomorphisms) {
      const auto im = integral_moebius(cat);
      inv["integral_zeta"] = matrix_to_json(im.a);
      inv["integral_moebius"] = matrix_to_json(im.b);
    } else {
      absent["integral_moebius"] = "needs a skeletal category with trivial endomorphisms";
    }

    CommandResult r;
    r.output = Json{{"command", "euler"},
                    {"version", kReportVersion},
                    {"input", {{"sha256", digest}}},
                    {"objects", cat.num_objects()},
                    {"morphisms", cat.num_morphisms()},
                    {"predicates", predicates_json(cat, pred)},
                    {"invariants", std::move(inv)},
                    {"absent", std::move(absent)},
                    {"warnings", std::move(warnings)}};
    return r;
  });
}

CommandResult cmd_euler(const std::string& path, const EulerOptions& opts) {
  return guarded([&] {
    const std::string text = read_file(path);
    CommandResult r = euler_report(parse_document(text), sha256_hex(text), opts);
    if (r.output.contains("input")) r.output["input"]["path"] = path;
    return r;
  });
}

CommandResult cmd_group(const std::string& sub, const std::string& arg, const GroupOptions& opts) {
  return guarded([&]() -> CommandResult {
    CommandResult r;
    if (sub == "equivariant") {
      const std::string text = read_file(arg);
      const GCWComplex x = gcw_from_json(parse_document(text), opts.cap);
      const auto labels = class_labels(x.classes.size());
      std::vector<BigInt> fixed;
      for (std::size_t h = 0; h < x.classes.size(); ++h) fixed.push_back(fixed_point_euler(x, h));
      const OmegaRelation rel = verify_omega_relation(x);
      if (!rel.holds) throw InternalAssertion("omega relation fails for the given cells");
      r.output = Json{{"command", "group equivariant"},
                      {"version", kReportVersion},
                      {"input", {{"path", arg}, {"sha256", sha256_hex(text)}}},
                      {"classes", classes_json(x.classes)},
                      {"chi_G", vector_to_json(chi_G(x))},
                      {"fixed_point_euler", {{"labels", labels}, {"values", rational_list(fixed)}}},
                      {"omega_relation", {{"lhs", vector_to_json(rel.lhs)}, {"rhs", vector_to_json(rel.rhs)}, {"holds", rel.holds}}}};
      return r;
    }
    const LoadedGroup lg = load_group(arg, opts.cap);
    const FiniteGroup& g = lg.group;
    const Json header = {{"spec", lg.source}, {"order", g.order()}, {"sha256", lg.digest}};
    if (sub == "orbitcat") {
      r.output = category_to_json(orbit_category(g, opts.cap).category);
      return r;
    }
    const auto classes = subgroup_classes(g, opts.cap);
    if (sub == "marks") {
      r.output = Json{{"command", "group marks"},
                      {"version", kReportVersion},
                      {"group", header},
                      {"classes", classes_json(classes)},
                      {"marks", matrix_to_json(table_of_marks(g, classes))}};
      return r;
    }
    if (sub == "nu") {
      const QMatrix nu = nu_matrix(g, opts.cap);
      if (!(nu == nu_matrix_explicit(g, opts.cap))) throw InternalAssertion("nu-matrix routes disagree");
      const QMatrix ch = table_of_marks(g, classes);
      QMatrix d(classes.size(), classes.size());
      for (std::size_t i = 0; i < classes.size(); ++i) d(i, i) = static_cast<long>(classes[i].weyl_order);
      if (!(nu * ch == d)) throw InternalAssertion("nu * ch != D");
      r.output = Json{{"command", "group nu"},
                      {"version", kReportVersion},
                      {"group", header},
                      {"classes", classes_json(classes)},
                      {"nu", matrix_to_json(nu)}};
      return r;
    }
    if (sub == "burnside") {
      if (!opts.xi && opts.random == 0) throw std::invalid_argument("burnside needs --xi or --random");
      r.output = Json{{"command", "group burnside"}, {"version", kReportVersion}, {"group", header},
                      {"classes", classes_json(classes)}};
      const QMatrix nu = nu_matrix(g, opts.cap);
      const auto labels = class_labels(classes.size());
      if (opts.xi) {
        const auto xi = parse_xi(*opts.xi);
        if (xi.size() != classes.size()) {
          throw std::invalid_argument("xi has length " + std::to_string(xi.size()) + ", expected " +
                                      std::to_string(classes.size()));
        }
        Json congruences = Json::array();
        bool all = true;
        std::vector<BigInt> nu_xi;
        for (std::size_t h = 0; h < classes.size(); ++h) {
          BigInt v = 0;
          for (std::size_t k = 0; k < classes.size(); ++k) v += nu(h, k).numerator() * xi[k];
          const BigInt m = static_cast<unsigned long>(classes[h].weyl_order);
          const bool ok = v % m == 0;
          all = all && ok;
          nu_xi.push_back(v);
          congruences.push_back({{"class", labels[h]}, {"value", v.get_str()}, {"modulus", classes[h].weyl_order}, {"holds", ok}});
        }
        if (all != burnside_check(g, xi)) throw InternalAssertion("burnside verdicts disagree");
        r.output["xi"] = rational_list(xi);
        r.output["nu_xi"] = rational_list(nu_xi);
        r.output["congruences"] = std::move(congruences);
        r.output["holds"] = all;
      }
      if (opts.random > 0) {
        const std::uint64_t seed = opts.seed.value_or(0);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> mult(0, 3);
        const QMatrix ch = table_of_marks(g, classes);
        bool all = true;
        for (std::size_t t = 0; t < opts.random; ++t) {
          std::vector<Rational> n;
          for (std::size_t k = 0; k < classes.size(); ++k) n.emplace_back(mult(rng));
          const QVector xi = ch * QVector(std::move(n));
          std::vector<BigInt> ints;
          for (std::size_t k = 0; k < xi.size(); ++k) ints.push_back(xi[k].numerator());
          all = all && burnside_check(g, ints);
        }
        if (!all) throw InternalAssertion("a G-set failed the Burnside congruences");
        r.output["random"] = {{"seed", seed}, {"count", opts.random}, {"all_hold", all}};
      }
      return r;
    }
    throw std::invalid_argument("unknown group subcommand '" + sub + "'");
  });
}

CommandResult cmd_examples_list() {
  CommandResult r;
  Json arr = Json::array();
  for (const auto& e : corpus_entries()) arr.push_back({{"name", e.name}, {"description", e.description}});
  r.output = Json{{"examples", std::move(arr)}};
  return r;
}

CommandResult cmd_examples_emit(const std::string& name, std::optional<std::size_t> q) {
  return guarded([&] {
    CommandResult r;
    r.output = category_to_json(corpus_category(name, q));
    return r;
  });
}

}  // namespace eicat
