#include "morphology.hpp"

#include <algorithm>
#include <functional>

namespace morpho {

Sub dilate(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  std::vector<Sub> imgs;
  for (const auto& v : lat.carrier(d)) imgs.push_back(se_apply(lat, b, v));
  return lat.sup(imgs);
}

Sub erode_generic(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  lat.check_same_ground(d);
  IdSet pass;
  for (const auto& v : lat.carrier_of_top())
    if (lat.leq(se_apply(lat, b, v), d)) pass.insert(v);
  return lat.co_restrict(pass);
}

Sub opening(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  return dilate(lat, b, erode_generic(lat, b, d));
}

Sub closing(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  return erode_generic(lat, b, dilate(lat, b, d));
}

Sub erode_paper_algorithm(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  lat.check_same_ground(d);
  IdSet S;
  for (const auto& v : lat.carrier(d))
    if (lat.leq(se_apply(lat, b, v), d)) S.insert(v);
  std::vector<Sub> parts;
  for (const auto& v : S) parts.push_back(lat.atom_of(v));
  for (const auto& v : S) {
    const Sub& bv = se_apply(lat, b, v);
    bool whole = true;
    for (const auto& w : lat.carrier(bv)) {
      if (!lat.leq(se_apply(lat, b, w), d)) {
        whole = false;
        break;
      }
    }
    if (whole) parts.push_back(bv);
  }
  return lat.sup(parts);
}

// --- closed forms ------------------------------------------------------------

namespace {

bool closed_form_builtin_fits(const Lattice& lat, const StructuringElement& b) {
  switch (lat.kind()) {
    case StructureKind::Set:
      return true;  // the powerset formulas work for any structuring element
    case StructureKind::Graph:
      return (lat.mode() == ForgetMode::Vertex && b.builtin == kBuiltinClosedNeighborhood) ||
             (lat.mode() == ForgetMode::Edge && b.builtin == kBuiltinEdgeNeighborhood);
    case StructureKind::Hypergraph:
      return (lat.mode() == ForgetMode::Vertex && b.builtin == kBuiltinHyperedgeStar) ||
             (lat.mode() == ForgetMode::Hyperedge && b.builtin == kBuiltinHyperedgeOverlap);
    case StructureKind::Complex:
      return lat.mode() == ForgetMode::Vertex && b.builtin == kBuiltinStarClosure;
  }
  return false;
}

void require_closed_form(const Lattice& lat, const StructuringElement& b) {
  if (!closed_form_builtin_fits(lat, b))
    fail(Errc::NoClosedForm, "no closed form for this structure, mode and structuring element");
}

IdSet induced_edges(const Ground& g, const IdSet& verts) {
  IdSet out;
  for (const auto& [t, e] : g.edges)
    if (verts.count(e.first) && verts.count(e.second)) out.insert(t);
  return out;
}

IdSet contained_secondaries(const Ground& g, const IdSet& verts) {
  IdSet out;
  const auto tokens = g.secondary_tokens();
  for (const auto& t : tokens)
    if (subset(g.secondary_members(t), verts)) out.insert(t);
  return out;
}

}  // namespace

bool has_closed_form(const Lattice& lat, const StructuringElement& b) {
  return closed_form_builtin_fits(lat, b);
}

Sub erode_closed_form(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  require_closed_form(lat, b);
  lat.check_same_ground(d);
  const Ground& g = lat.ground();

  switch (lat.kind()) {
    case StructureKind::Set: {
      IdSet keep;
      for (const auto& x : g.vertices)
        if (subset(se_apply(lat, b, x).prim, d.prim)) keep.insert(x);
      return Sub{std::move(keep), {}, lat.serial()};
    }

    case StructureKind::Graph: {
      if (lat.mode() == ForgetMode::Vertex) {
        IdSet vbar;
        for (const auto& x : g.vertices)
          if (lat.leq(se_apply(lat, b, x), d)) vbar.insert(x);
        IdSet ebar = induced_edges(g, vbar);
        return Sub{std::move(vbar), std::move(ebar), lat.serial()};
      }
      // Edge forgetting: a vertex survives when it meets at least one edge of
      // d and every edge of d at it passes the neighborhood test. Isolated
      // vertices of d are dropped, unlike in the generic erosion.
      IdSet vbar;
      for (const auto& x : g.vertices) {
        bool any = false, all = true;
        for (const auto& t : d.sec) {
          const auto& e = g.edges.at(t);
          if (e.first != x && e.second != x) continue;
          any = true;
          if (!lat.leq(se_apply(lat, b, t), d)) {
            all = false;
            break;
          }
        }
        if (any && all) vbar.insert(x);
      }
      IdSet ebar;
      for (const auto& t : d.sec) {
        const auto& e = g.edges.at(t);
        if (vbar.count(e.first) && vbar.count(e.second)) ebar.insert(t);
      }
      return Sub{std::move(vbar), std::move(ebar), lat.serial()};
    }

    case StructureKind::Hypergraph: {
      if (lat.mode() == ForgetMode::Vertex) {
        IdSet vbar;
        for (const auto& x : g.vertices)
          if (lat.leq(se_apply(lat, b, x), d)) vbar.insert(x);
        return Sub{vbar, contained_secondaries(g, vbar), lat.serial()};
      }
      IdSet vbar;
      for (const auto& x : g.vertices) {
        bool any = false, all = true;
        for (const auto& n : d.sec) {
          if (!g.hyperedges.at(n).count(x)) continue;
          any = true;
          if (!lat.leq(se_apply(lat, b, n), d)) {
            all = false;
            break;
          }
        }
        if (any && all) vbar.insert(x);
      }
      IdSet ebar;
      for (const auto& n : d.sec)
        if (subset(g.hyperedges.at(n), vbar)) ebar.insert(n);
      return Sub{std::move(vbar), std::move(ebar), lat.serial()};
    }

    case StructureKind::Complex: {
      IdSet vbar;
      for (const auto& x : g.vertices)
        if (lat.leq(se_apply(lat, b, x), d)) vbar.insert(x);
      return Sub{vbar, contained_secondaries(g, vbar), lat.serial()};
    }
  }
  fail(Errc::NoClosedForm, "unreachable");
}

Sub dilate_closed_form(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  require_closed_form(lat, b);
  lat.check_same_ground(d);
  const Ground& g = lat.ground();

  switch (lat.kind()) {
    case StructureKind::Set: {
      IdSet out;
      for (const auto& x : d.prim) {
        const auto& img = se_apply(lat, b, x).prim;
        out.insert(img.begin(), img.end());
      }
      return Sub{std::move(out), {}, lat.serial()};
    }

    case StructureKind::Graph: {
      IdSet vbar;
      if (lat.mode() == ForgetMode::Vertex) {
        for (const auto& x : g.vertices)
          if (!set_inter(se_apply(lat, b, x).prim, d.prim).empty()) vbar.insert(x);
      } else {
        // Keyed on the vertices of d: every edge one of whose endpoints meets
        // V(d) contributes its neighborhood's vertex set.
        for (const auto& [t, e] : g.edges) {
          if (d.prim.count(e.first) || d.prim.count(e.second)) {
            const auto& verts = se_apply(lat, b, t).prim;
            vbar.insert(verts.begin(), verts.end());
          }
        }
      }
      // Edges induced by the ground, not only those contributed by
      // neighborhoods; this is where the formula can exceed the generic sup.
      IdSet ebar = induced_edges(g, vbar);
      return Sub{std::move(vbar), std::move(ebar), lat.serial()};
    }

    case StructureKind::Hypergraph: {
      IdSet vbar;
      if (lat.mode() == ForgetMode::Vertex) {
        for (const auto& x : g.vertices)
          if (!set_inter(se_apply(lat, b, x).prim, d.prim).empty()) vbar.insert(x);
      } else {
        for (const auto& [n, members] : g.hyperedges)
          if (!set_inter(members, d.prim).empty()) vbar.insert(members.begin(), members.end());
      }
      return Sub{vbar, contained_secondaries(g, vbar), lat.serial()};
    }

    case StructureKind::Complex: {
      IdSet vbar;
      for (const auto& x : g.vertices)
        if (!set_inter(se_apply(lat, b, x).prim, d.prim).empty()) vbar.insert(x);
      return Sub{vbar, contained_secondaries(g, vbar), lat.serial()};
    }
  }
  fail(Errc::NoClosedForm, "unreachable");
}

// --- law harness -------------------------------------------------------------

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = {
      "adjunction",         "monotone",
      "commute-inf",        "commute-sup",
      "preserve",           "closing-extensive",
      "opening-antiextensive", "eps-delta-eps",
      "delta-eps-delta",    "idempotent",
      "cover-antiextensive", "cover-extensive",
      "boolean-duality",    "classical-duality",
  };
  return ids;
}

namespace {

struct Harness {
  const Lattice& lat;
  const StructuringElement& b;
  const Sampler& sampler;
  LawReport report;

  Harness(const Lattice& l, const StructuringElement& se, const std::string& law,
          const Sampler& s)
      : lat(l), b(se), sampler(s) {
    report.law = law;
    report.status = "holds";
    report.sampler = s.exhaustive ? "exhaustive" : "random";
    report.seed = s.exhaustive ? 0 : s.seed;
  }

  void falsify(std::vector<std::pair<std::string, Sub>> w, const std::string& note = "") {
    if (report.status == "falsified") return;
    report.status = "falsified";
    report.witness = std::move(w);
    if (!note.empty()) report.note = note;
  }

  bool done() const { return report.status == "falsified"; }

  // Runs `fn` over single subobjects.
  void each(const std::function<void(const Sub&)>& fn) {
    if (sampler.exhaustive) {
      lat.for_each([&](const Sub& d) {
        if (!done()) {
          fn(d);
          ++report.samples;
        }
      });
    } else {
      std::mt19937_64 rng(sampler.seed);
      for (std::uint64_t i = 0; i < sampler.samples && !done(); ++i) {
        fn(lat.random_sub(rng));
        ++report.samples;
      }
    }
  }

  void each_pair(const std::function<void(const Sub&, const Sub&)>& fn) {
    if (sampler.exhaustive) {
      auto all = lat.enumerate();
      for (const auto& d : all) {
        for (const auto& e : all) {
          if (done()) return;
          fn(d, e);
          ++report.samples;
        }
      }
    } else {
      std::mt19937_64 rng(sampler.seed);
      for (std::uint64_t i = 0; i < sampler.samples && !done(); ++i) {
        Sub d = lat.random_sub(rng);
        Sub e = lat.random_sub(rng);
        fn(d, e);
        ++report.samples;
      }
    }
  }

  // Families for the commutation laws; always includes the empty family.
  void each_family(const std::function<void(const std::vector<Sub>&)>& fn) {
    if (sampler.exhaustive) {
      fn({});
      ++report.samples;
      auto all = lat.enumerate();
      for (const auto& d : all) {
        for (const auto& e : all) {
          if (done()) return;
          fn({d, e});
          ++report.samples;
        }
      }
    } else {
      std::mt19937_64 rng(sampler.seed);
      for (std::uint64_t i = 0; i < sampler.samples && !done(); ++i) {
        std::vector<Sub> fam;
        std::uint64_t k = i == 0 ? 0 : rng() % 5;  // first sample: empty family
        for (std::uint64_t j = 0; j < k; ++j) fam.push_back(lat.random_sub(rng));
        fn(fam);
        ++report.samples;
      }
    }
  }
};

std::string family_note(size_t k) { return "family size " + std::to_string(k); }

}  // namespace

LawReport check_law(const Lattice& lat, const StructuringElement& b, const std::string& law,
                    const Sampler& sampler) {
  Harness h(lat, b, law, sampler);
  auto eps = [&](const Sub& d) { return erode_generic(lat, b, d); };
  auto dil = [&](const Sub& d) { return dilate(lat, b, d); };

  if (law == "adjunction") {
    h.each_pair([&](const Sub& d, const Sub& e) {
      if (lat.leq(d, eps(e)) != lat.leq(dil(d), e))
        h.falsify({{"d", d}, {"e", e}, {"erosion(e)", eps(e)}, {"dilation(d)", dil(d)}});
    });
  } else if (law == "monotone") {
    h.each_pair([&](const Sub& d0, const Sub& e) {
      Sub d = lat.inf2(d0, e);  // d ≤ e by construction
      if (!lat.leq(eps(d), eps(e)))
        h.falsify({{"d", d}, {"e", e}, {"erosion(d)", eps(d)}, {"erosion(e)", eps(e)}});
      else if (!lat.leq(dil(d), dil(e)))
        h.falsify({{"d", d}, {"e", e}, {"dilation(d)", dil(d)}, {"dilation(e)", dil(e)}});
    });
  } else if (law == "commute-inf") {
    h.each_family([&](const std::vector<Sub>& fam) {
      std::vector<Sub> eroded;
      for (const auto& d : fam) eroded.push_back(eps(d));
      Sub lhs = eps(lat.inf(fam)), rhs = lat.inf(eroded);
      if (lhs != rhs) h.falsify({{"lhs", lhs}, {"rhs", rhs}}, family_note(fam.size()));
    });
  } else if (law == "commute-sup") {
    h.each_family([&](const std::vector<Sub>& fam) {
      std::vector<Sub> dilated;
      for (const auto& d : fam) dilated.push_back(dil(d));
      Sub lhs = dil(lat.sup(fam)), rhs = lat.sup(dilated);
      if (lhs != rhs) h.falsify({{"lhs", lhs}, {"rhs", rhs}}, family_note(fam.size()));
    });
  } else if (law == "preserve") {
    h.report.samples = 1;
    if (eps(lat.top()) != lat.top())
      h.falsify({{"erosion(top)", eps(lat.top())}}, "erosion must fix the top");
    else if (dil(lat.bottom()) != lat.bottom())
      h.falsify({{"dilation(bottom)", dil(lat.bottom())}}, "dilation must fix the bottom");
  } else if (law == "closing-extensive") {
    h.each([&](const Sub& d) {
      Sub c = closing(lat, b, d);
      if (!lat.leq(d, c)) h.falsify({{"d", d}, {"closing(d)", c}});
    });
  } else if (law == "opening-antiextensive") {
    h.each([&](const Sub& d) {
      Sub o = opening(lat, b, d);
      if (!lat.leq(o, d)) h.falsify({{"d", d}, {"opening(d)", o}});
    });
  } else if (law == "eps-delta-eps") {
    h.each([&](const Sub& d) {
      Sub lhs = eps(dil(eps(d)));
      if (lhs != eps(d)) h.falsify({{"d", d}, {"lhs", lhs}, {"rhs", eps(d)}});
    });
  } else if (law == "delta-eps-delta") {
    h.each([&](const Sub& d) {
      Sub lhs = dil(eps(dil(d)));
      if (lhs != dil(d)) h.falsify({{"d", d}, {"lhs", lhs}, {"rhs", dil(d)}});
    });
  } else if (law == "idempotent") {
    h.each([&](const Sub& d) {
      Sub o = opening(lat, b, d), c = closing(lat, b, d);
      if (opening(lat, b, o) != o)
        h.falsify({{"d", d}, {"opening(d)", o}, {"opening(opening(d))", opening(lat, b, o)}});
      else if (closing(lat, b, c) != c)
        h.falsify({{"d", d}, {"closing(d)", c}, {"closing(closing(d))", closing(lat, b, c)}});
    });
  } else if (law == "cover-antiextensive" || law == "cover-extensive") {
    if (!is_covered(lat, b)) {
      h.report.status = "precondition-unmet";
      h.report.note = "lattice is not covered by this structuring element";
      return h.report;
    }
    h.each([&](const Sub& d) {
      if (law == "cover-antiextensive") {
        if (!lat.leq(eps(d), d)) h.falsify({{"d", d}, {"erosion(d)", eps(d)}});
      } else {
        if (!lat.leq(d, dil(d))) h.falsify({{"d", d}, {"dilation(d)", dil(d)}});
      }
    });
  } else if (law == "boolean-duality") {
    bool boolean = false;
    try {
      boolean = lat.is_boolean();
    } catch (const Error& e) {
      if (e.code != Errc::TooLarge) throw;
    }
    if (!boolean || !is_covered(lat, b)) {
      h.report.status = "precondition-unmet";
      h.report.note = boolean ? "lattice is not covered by this structuring element"
                              : "lattice is not Boolean";
      return h.report;
    }
    h.each([&](const Sub& d) {
      Sub lhs = eps(lat.complement(d)), rhs = lat.complement(dil(d));
      if (lhs != rhs)
        h.falsify({{"d", d}, {"erosion(complement(d))", lhs}, {"complement(dilation(d))", rhs}});
    });
  } else if (law == "classical-duality") {
    if (lat.kind() != StructureKind::Set) {
      h.report.status = "precondition-unmet";
      h.report.note = "transpose duality is defined on powerset lattices only";
      return h.report;
    }
    StructuringElement bt = se_transpose(lat, b);
    h.each([&](const Sub& d) {
      Sub lhs = eps(lat.complement(d));
      Sub rhs = lat.complement(dilate(lat, bt, d));
      if (lhs != rhs)
        h.falsify(
            {{"d", d}, {"erosion(complement(d))", lhs}, {"complement(transpose-dilation(d))", rhs}});
    });
  } else {
    fail(Errc::UnknownName, "unknown law '" + law + "'");
  }
  return h.report;
}

MethodComparison compare_methods(const Lattice& lat, const StructuringElement& b, const Sub& d) {
  MethodComparison cmp;
  cmp.object = d;
  cmp.erosions.emplace_back("generic", erode_generic(lat, b, d));
  cmp.dilations.emplace_back("generic", dilate(lat, b, d));

  if (has_closed_form(lat, b)) {
    cmp.erosions.emplace_back("closed-form", erode_closed_form(lat, b, d));
    cmp.dilations.emplace_back("closed-form", dilate_closed_form(lat, b, d));
  } else {
    cmp.erosions_na.emplace_back("closed-form", "NoClosedForm");
    cmp.dilations_na.emplace_back("closed-form", "NoClosedForm");
  }
  cmp.erosions.emplace_back("paper-algorithm", erode_paper_algorithm(lat, b, d));

  for (const auto& [name, r] : cmp.erosions)
    if (r != cmp.erosions.front().second) cmp.all_agree = false;
  for (const auto& [name, r] : cmp.dilations)
    if (r != cmp.dilations.front().second) cmp.all_agree = false;
  return cmp;
}

}  // namespace morpho
