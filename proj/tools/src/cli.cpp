// Copyright 2026 The gcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcf/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gcf/divisors.hpp"
#include "gcf/error.hpp"
#include "gcf/factor.hpp"
#include "gcf/kernel.hpp"
#include "gcf/nilpotent.hpp"
#include "gcf/polytype.hpp"
#include "gcf/simtype.hpp"
#include "gcf/text.hpp"

namespace gcf::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "f=" << format_poly(w.f) << '\n' << "g=" << format_poly(w.g) << '\n';
}

struct Options {
  std::uint64_t seed = kDefaultFactorSeed;
  std::string field = "GF(2)";
  std::string f, g, poly, invariants, matrix, profile;
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned threads = 1;
  bool timing = false;
};

int dispatch(const CLI::App& app, const Options& o, std::ostream& out) {
  const auto used = [&](const char* name) { return app.get_subcommand(name)->parsed(); };
  FactorOptions fopts{o.seed};

  if (used("simtype")) {
    const Field F = parse_field(o.field);
    SimtypeOptions so;
    so.factor = fopts;
    out << format_divisors(simtype_of_gcf(parse_poly(F, o.f), parse_poly(F, o.g), so).divisors) << '\n';
  } else if (used("eldiv")) {
    const Field F = parse_field(o.field);
    InvariantFactors invs{parse_poly_list(F, o.invariants)};
    invs.validate();
    SimtypeOptions so;
    so.factor = fopts;
    out << format_divisors(eldiv_of_ga(invs, parse_poly(F, o.g), so)) << '\n';
  } else if (used("polytype")) {
    const Matrix a = parse_matrix(read_file(o.matrix));
    const PolytypeResult r = polytype_decide(a, {o.budget, std::max(1u, o.threads)});
    switch (r.verdict) {
      case Verdict::Yes:
        out << "Yes (" << r.witness->strategy << ")\n";
        print_witness(out, *r.witness);
        break;
      case Verdict::No:
        out << "No (exhausted " << r.search->total << " pairs)\n";
        break;
      case Verdict::Unknown:
        out << "Unknown (budget of " << r.search->budget << " pairs spent)\n";
        break;
    }
    if (r.search) out << format_certificate(a.field(), a.size(), r.verdict, *r.search, o.timing);
  } else if (used("counterexample")) {
    out << format_matrix(counterexample_matrix(parse_field(o.field)));
  } else if (used("nilpotent")) {
    const Field F = parse_field(o.field);
    const NilpotentResult r = nilpotent_decide(F, NilpotentProfile::parse(o.profile));
    if (r.verdict == Verdict::Yes) {
      out << "Yes (" << r.witness->strategy << ")\n";
      print_witness(out, *r.witness);
      if (r.solution) {
        out << "triples=";
        for (std::size_t i = 0; i < r.solution->size(); ++i) {
          const NilpotentTriple& t = (*r.solution)[i];
          out << (i ? " " : "") << '(' << t.d << ',' << t.a << ',' << t.b << ')';
        }
        out << '\n';
      }
    } else {
      out << "No (triple system unsolvable, " << r.nodes << " nodes searched)\n";
    }
  } else if (used("factor")) {
    const Field F = parse_field(o.field);
    out << format_factorization(F, factor(parse_poly(F, o.poly), fopts)) << '\n';
  } else if (used("span")) {
    const Field F = parse_field(o.field);
    const Poly f = parse_poly(F, o.f), g = parse_poly(F, o.g);
    out << "dim=" << span_dimension_cd(f, g) << " predicted=" << predicted_span_dimension(f, g) << '\n';
  } else if (used("element")) {
    const Field F = parse_field(o.field);
    const ElementData e = element_data(parse_poly(F, o.f), parse_poly(F, o.g));
    out << "minpoly=" << format_poly(e.minpoly) << '\n'
        << "trace=" << format_elem(F, e.trace) << '\n'
        << "norm=" << format_elem(F, e.norm) << '\n'
        << "inverse=" << (e.inverse ? format_poly(*e.inverse) : std::string("none")) << '\n'
        << "rep=\n"
        << format_matrix(e.rep);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Similarity types of g(C_f) and polynomial-type decisions over finite fields", "gcf"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "seed for randomized factorization steps");

  auto field_opt = [&](CLI::App* c) { c->add_option("--field", o.field, "GF(p), GF(p^k) or GF(p^k;mod=...)")->required(); };
  auto fg = [&](CLI::App* c) {
    c->add_option("--f", o.f, "monic polynomial")->required();
    c->add_option("--g", o.g, "polynomial")->required();
  };

  CLI::App* simtype = app.add_subcommand("simtype", "elementary divisors of g(C_f)");
  field_opt(simtype);
  fg(simtype);

  CLI::App* eldiv = app.add_subcommand("eldiv", "elementary divisors of g(A) from the invariant factors of A");
  field_opt(eldiv);
  eldiv->add_option("--invariants", o.invariants, "q1,q2,... with q1 | q2 | ...")->required();
  eldiv->add_option("--g", o.g, "polynomial")->required();

  CLI::App* polytype = app.add_subcommand("polytype", "is A similar to g(C_f) for some f, g?");
  polytype->add_option("--matrix", o.matrix, "matrix file")->required();
  polytype->add_option("--budget", o.budget, "search budget in (f, g) pairs");
  polytype->add_option("--threads", o.threads, "search threads");
  polytype->add_flag("--timing", o.timing, "add elapsed_ms to the certificate");

  CLI::App* cex = app.add_subcommand("counterexample", "the smallest matrix not of polynomial type");
  field_opt(cex);

  CLI::App* nil = app.add_subcommand("nilpotent", "decide a nilpotent profile");
  field_opt(nil);
  nil->add_option("--profile", o.profile, "Jordan block sizes, e.g. 1,3,5")->required();

  CLI::App* fac = app.add_subcommand("factor", "factor a polynomial");
  field_opt(fac);
  fac->add_option("--poly", o.poly, "polynomial")->required();

  CLI::App* span = app.add_subcommand("span", "dimension of span{C^i D^j}");
  field_opt(span);
  fg(span);

  CLI::App* element = app.add_subcommand("element", "data of g(alpha) in F[X]/(f)");
  field_opt(element);
  fg(element);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gcf: " << e.what() << '\n';
    return kExitParse;
  }

  // nothing reaches out unless the whole report was produced
  std::ostringstream report;
  try {
    const int rc = dispatch(app, o, report);
    out << report.str();
    return rc;
  } catch (const ParseError& e) {
    err << "gcf: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "gcf: " << e.what() << '\n';
    return kExitEngine;
  }
}

}  // namespace gcf::cli
