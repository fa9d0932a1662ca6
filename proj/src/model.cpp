#include "model.hpp"

#include "schemas.hpp"

namespace morpho {

Model make_model(std::shared_ptr<const Lattice> lat, StructuringElement b,
                 std::map<std::string, Sub> valuation, bool unchecked) {
  se_validate(*lat, b);
  for (const auto& [name, d] : valuation) lat->check_same_ground(d);
  if (!unchecked && !is_covered(*lat, b))
    fail(Errc::NotCovered,
         "structuring element does not cover the ground; pass unchecked to "
         "evaluate anyway");
  return Model{std::move(lat), std::move(b), std::move(valuation)};
}

Model kripke_to_model(const IdSet& worlds,
                      const std::vector<std::pair<std::string, std::string>>& relation,
                      const std::map<std::string, IdSet>& valuation, bool unchecked) {
  for (const auto& [u, v] : relation) {
    if (!worlds.count(u)) fail(Errc::UnknownWorld, "relation mentions unknown world " + u);
    if (!worlds.count(v)) fail(Errc::UnknownWorld, "relation mentions unknown world " + v);
  }
  Ground g;
  g.kind = StructureKind::Set;
  g.vertices = worlds;
  g.validate();
  auto lat = std::make_shared<Lattice>(std::move(g), ForgetMode::Element);
  StructuringElement b = builtin_se(*lat, kBuiltinRelation, relation);
  std::map<std::string, Sub> val;
  for (const auto& [name, ids] : valuation) {
    for (const auto& w : ids)
      if (!worlds.count(w)) fail(Errc::UnknownWorld, "valuation of " + name + " mentions unknown world " + w);
    val.emplace(name, lat->make_sub(ids, {}));
  }
  return make_model(std::move(lat), std::move(b), std::move(val), unchecked);
}

Sub eval(const Model& m, const Formula& f) {
  const Lattice& lat = *m.lat;
  switch (f->conn) {
    case Conn::Top: return lat.top();
    case Conn::Bot: return lat.bottom();
    case Conn::Prop: {
      auto it = m.valuation.find(f->name);
      if (it == m.valuation.end())
        fail(Errc::UnknownProposition, "no valuation for '" + f->name + "'");
      return it->second;
    }
    case Conn::Meta:
      fail(Errc::BadInput, "metavariable ?" + f->name + " in a concrete formula");
    case Conn::Not: return lat.complement(eval(m, f->a));
    case Conn::And: return lat.inf2(eval(m, f->a), eval(m, f->b));
    case Conn::Or: return lat.sup2(eval(m, f->a), eval(m, f->b));
    case Conn::Implies: return lat.exponential(eval(m, f->b), eval(m, f->a));
    case Conn::Box: return erode_generic(lat, m.b, eval(m, f->a));
    case Conn::Diamond: return dilate(lat, m.b, eval(m, f->a));
  }
  fail(Errc::BadInput, "malformed formula");
}

bool satisfies(const Model& m, const Formula& f) { return eval(m, f) == m.lat->top(); }

bool entails_on_models(const std::vector<Model>& models, const std::vector<Formula>& premises,
                       const Formula& conclusion) {
  for (const auto& m : models) {
    bool all = true;
    for (const auto& p : premises)
      if (!satisfies(m, p)) {
        all = false;
        break;
      }
    if (all && !satisfies(m, conclusion)) return false;
  }
  return true;
}

namespace {

void collect_metas(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->conn == Conn::Meta) out.insert(f->name);
  collect_metas(f->a, out);
  collect_metas(f->b, out);
}

void collect_props(const Formula& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->conn == Conn::Prop) out.insert(f->name);
  collect_props(f->a, out);
  collect_props(f->b, out);
}

// Renames atoms to p, q in first-occurrence order so instantiations that only
// differ by atom names collapse to one check.
Formula canonical_atoms(const Formula& f, std::map<std::string, std::string>& ren) {
  switch (f->conn) {
    case Conn::Prop: {
      auto it = ren.find(f->name);
      if (it == ren.end()) it = ren.emplace(f->name, ren.empty() ? "p" : "q").first;
      return f_prop(it->second);
    }
    case Conn::Top:
    case Conn::Bot:
    case Conn::Meta:
      return f;
    case Conn::Not: return f_not(canonical_atoms(f->a, ren));
    case Conn::Box: return f_box(canonical_atoms(f->a, ren));
    case Conn::Diamond: return f_dia(canonical_atoms(f->a, ren));
    case Conn::And: {
      Formula a = canonical_atoms(f->a, ren);
      return f_and(std::move(a), canonical_atoms(f->b, ren));
    }
    case Conn::Or: {
      Formula a = canonical_atoms(f->a, ren);
      return f_or(std::move(a), canonical_atoms(f->b, ren));
    }
    case Conn::Implies: {
      Formula a = canonical_atoms(f->a, ren);
      return f_implies(std::move(a), canonical_atoms(f->b, ren));
    }
  }
  return f;
}

}  // namespace

std::vector<LawReport> validate_axiom_suite(const Model& m, const std::string& profile,
                                            const SuiteOptions& opt) {
  const Lattice& lat = *m.lat;
  const bool covered = is_covered(lat, m.b);
  const bool boolean = lat.is_boolean();

  std::vector<Sub> all;
  bool exhaustive = true;
  try {
    all = lat.enumerate();
    std::uint64_t n = all.size();
    if (n * n > opt.exhaustive_limit) exhaustive = false;
  } catch (const Error& e) {
    if (e.code != Errc::TooLarge) throw;
    exhaustive = false;
  }

  const std::string instance =
      std::string(kind_name(lat.kind())) + "/" + mode_name(lat.mode()) + "/" +
      (m.b.builtin.empty() ? "table" : m.b.builtin);

  std::vector<LawReport> out;
  for (const auto& id : profile_schemas(profile)) {
    const Schema& s = *find_schema(id);
    LawReport rep;
    rep.law = id;
    rep.instance = instance;
    rep.status = "holds";
    rep.sampler = exhaustive ? "exhaustive" : "random";
    rep.seed = exhaustive ? 0 : opt.seed;

    if (!covered && (id == "box-elim" || id == "dia-intro")) {
      rep.status = "precondition-unmet";
      rep.note = "requires a covering structuring element";
      out.push_back(std::move(rep));
      continue;
    }
    if (id == "duality" && !boolean) {
      rep.status = "precondition-unmet";
      rep.note = "requires a Boolean lattice";
      out.push_back(std::move(rep));
      continue;
    }

    std::set<std::string> metas;
    collect_metas(s.lhs, metas);
    collect_metas(s.rhs, metas);
    std::vector<std::string> meta_list(metas.begin(), metas.end());

    // Every assignment of the metavariables to the atoms p and q, collapsed
    // up to atom renaming.
    std::vector<Formula> instances;
    std::set<std::string> seen;
    const std::uint64_t combos = 1ull << meta_list.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      Substitution subst;
      for (size_t i = 0; i < meta_list.size(); ++i)
        subst[meta_list[i]] = f_prop((mask >> i) & 1 ? "q" : "p");
      for (const auto& dir : schema_directions(s)) {
        std::map<std::string, std::string> ren;
        Formula inst = canonical_atoms(substitute(dir, subst), ren);
        if (seen.insert(print_formula(inst)).second) instances.push_back(std::move(inst));
      }
    }

    Model probe = m;
    auto check_instance = [&](const Formula& inst) {
      std::set<std::string> props;
      collect_props(inst, props);
      std::vector<std::string> plist(props.begin(), props.end());

      auto run_valuation = [&](const std::vector<Sub>& vals) {
        if (rep.falsified()) return;
        probe.valuation.clear();
        for (size_t i = 0; i < plist.size(); ++i) probe.valuation.emplace(plist[i], vals[i]);
        ++rep.samples;
        if (!satisfies(probe, inst)) {
          std::vector<std::pair<std::string, Sub>> w;
          for (size_t i = 0; i < plist.size(); ++i) w.emplace_back(plist[i], vals[i]);
          w.emplace_back("evaluated", eval(probe, inst));
          rep.status = "falsified";
          rep.witness = std::move(w);
          rep.note = "instance " + print_formula(inst);
        }
      };

      if (exhaustive) {
        if (plist.empty()) {
          run_valuation({});
        } else if (plist.size() == 1) {
          for (const auto& d : all) run_valuation({d});
        } else {
          for (const auto& d : all)
            for (const auto& e : all) {
              if (rep.falsified()) return;
              run_valuation({d, e});
            }
        }
      } else {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.samples && !rep.falsified(); ++i) {
          std::vector<Sub> vals;
          for (size_t j = 0; j < plist.size(); ++j) vals.push_back(lat.random_sub(rng));
          run_valuation(vals);
        }
      }
    };

    for (const auto& inst : instances) {
      if (rep.falsified()) break;
      check_instance(inst);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace morpho
