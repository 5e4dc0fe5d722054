#include "azbench/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "azbench/error.hpp"
#include "azbench/io.hpp"

namespace azbench {

  namespace {
    using io::json;

    struct Outcome {
      json        payload;  // "command" and "inputs" are added by the caller
      int         code = exit_ok;
      std::string summary;
      // cp enumerate emits JSON lines instead of one object
      std::vector<json> lines;
    };

    using Handler = std::function<Outcome(json const& inputs)>;

    ////////////////////////////////////////////////////////////////////////
    // Input helpers
    ////////////////////////////////////////////////////////////////////////

    io::GroupFile group_of(json const& inputs) {
      return io::group_from_json(inputs.at("group"));
    }

    CPContext context_of(json const& inputs) {
      return CPContext(io::kgroup_of(group_of(inputs)));
    }

    std::string join(json const& arr) {
      std::string s;
      for (auto const& v : arr) {
        s += (s.empty() ? "" : " ")
             + (v.is_string() ? v.get<std::string>() : v.dump());
      }
      return s;
    }

    json one_based(Embedding const& f) {
      json out = json::array();
      for (std::size_t p : f) {
        out.push_back(p + 1);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // group
    ////////////////////////////////////////////////////////////////////////

    Outcome group_check(json const& in) {
      io::GroupFile const gf = group_of(in);
      GroupTable const&   g  = gf.group;
      GroupAnalysis const a  = analyze(g);
      Outcome             o;
      json&               p = o.payload;
      p["name"]                = g.name();
      p["order"]               = g.order();
      p["exponent"]            = a.exponent;
      p["center"]              = io::names_of(g, a.center);
      p["commutator_subgroup"] = io::names_of(g, a.commutator_subgroup);
      p["involutions"]         = io::names_of(g, a.involutions);
      p["class_csw"]           = is_class_csw(g);
      std::vector<Elem> k(gf.k.begin(), gf.k.end());
      p["K"]       = gf.k.empty() ? json(nullptr) : io::names_of(g, k);
      p["K_valid"] = gf.k.empty() ? json(nullptr) : json(validate_k(g, gf.k));
      std::ostringstream s;
      s << g.name() << ": order " << g.order() << ", exponent " << a.exponent
        << ", center {" << join(p["center"]) << "}, G' {"
        << join(p["commutator_subgroup"]) << "}, involutions {"
        << join(p["involutions"]) << "}, class "
        << (p["class_csw"].get<bool>() ? "yes" : "no");
      if (!gf.k.empty()) {
        s << ", K " << (p["K_valid"].get<bool>() ? "valid" : "invalid");
      }
      o.summary = s.str();
      if (!p["class_csw"].get<bool>() || p["K_valid"] == json(false)) {
        o.code = exit_falsified;
      }
      return o;
    }

    Outcome group_rank(json const& in) {
      io::GroupFile const gf = group_of(in);
      Outcome             o;
      o.payload["name"] = gf.group.name();
      o.payload["rank"] = rank(gf.group);
      o.summary = gf.group.name() + ": rank "
                  + std::to_string(o.payload["rank"].get<std::size_t>());
      return o;
    }

    Outcome group_export(json const& in) {
      Outcome o;
      o.payload["group"] = in.at("group");
      o.summary          = in.at("group").dump(2);
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // qs
    ////////////////////////////////////////////////////////////////////////

    Outcome qs_from_group_cmd(json const& in) {
      io::GroupFile const      gf = group_of(in);
      GroupQuadraticData const d  = qs_from_group(gf.group);
      Outcome                  o;
      o.payload["qs"]      = io::qs_to_json(d.qs);
      o.payload["v_basis"] = io::names_of(gf.group, d.v_basis);
      o.payload["u_lifts"] = io::names_of(gf.group, d.u_lifts);
      o.summary = "QS(" + gf.group.name() + "): dimU " + std::to_string(d.qs.dim_u())
                  + ", dimV " + std::to_string(d.qs.dim_v());
      return o;
    }

    Outcome qs_to_group_cmd(json const& in) {
      QuadraticStructure const qs = io::qs_from_json(in.at("qs"));
      GroupTable const         g  = group_from_qs(qs);
      Outcome                  o;
      o.payload["group"] = io::group_to_json(g, {});
      o.summary = g.name() + ": order " + std::to_string(g.order());
      return o;
    }

    QSMorphism inclusion(QuadraticStructure const& from) {
      QSMorphism m;
      for (unsigned i = 0; i < from.dim_u(); ++i) {
        m.f.columns.push_back(unit(i));
      }
      for (unsigned i = 0; i < from.dim_v(); ++i) {
        m.g.columns.push_back(unit(i));
      }
      return m;
    }

    Outcome qs_amalgam_cmd(json const& in) {
      auto const q0 = io::qs_from_json(in.at("qs0"));
      auto const q1 = io::qs_from_json(in.at("qs1"));
      auto const q2 = io::qs_from_json(in.at("qs2"));
      auto const e1 = in.contains("e1") ? io::morphism_from_json(in["e1"]) : inclusion(q0);
      auto const e2 = in.contains("e2") ? io::morphism_from_json(in["e2"]) : inclusion(q0);
      QSAmalgam const a = free_amalgam(q0, q1, e1, q2, e2);
      bool const r1 = is_morphism(q1, a.qs, a.into1) && is_injective(a.into1);
      bool const r2 = is_morphism(q2, a.qs, a.into2) && is_injective(a.into2);
      bool const common
          = compose(a.into1, e1) == compose(a.into2, e2);
      std::size_t const want
          = q1.dim_v() + q2.dim_v() - q0.dim_v()
            + std::size_t{q1.dim_u() - q0.dim_u()} * (q2.dim_u() - q0.dim_u());
      bool const dims = a.qs.dim_v() == want
                        && a.qs.dim_u() == q1.dim_u() + q2.dim_u() - q0.dim_u();
      json nondeg = nullptr;
      if (a.qs.dim_u() <= 20) {
        nondeg = is_nondegenerate(a.qs);
      }
      Outcome o;
      json&   p = o.payload;
      p["qs"]    = io::qs_to_json(a.qs);
      p["into1"] = io::morphism_to_json(a.into1, a.qs.dim_u(), a.qs.dim_v());
      p["into2"] = io::morphism_to_json(a.into2, a.qs.dim_u(), a.qs.dim_v());
      p["checks"] = {{"restriction1", r1},
                     {"restriction2", r2},
                     {"agree_on_common", common},
                     {"dimension_formula", dims},
                     {"nondegenerate", nondeg}};
      bool const ok = r1 && r2 && common && dims && nondeg != json(false);
      p["ok"]   = ok;
      o.code    = ok ? exit_ok : exit_falsified;
      o.summary = "amalgam: dimU " + std::to_string(a.qs.dim_u()) + ", dimV "
                  + std::to_string(a.qs.dim_v()) + (ok ? ", checks pass"
                                                       : ", CHECK FAILED");
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // cp
    ////////////////////////////////////////////////////////////////////////

    Outcome cp_enumerate(json const& in) {
      CPContext const     ctx   = context_of(in);
      std::uint64_t const count = in.at("count").get<std::uint64_t>();
      Outcome             o;
      std::ostringstream  s;
      std::uint64_t       index = 0;
      for (CPElement const& x : ctx.enumerate(count)) {
        json line;
        line["index"] = index;
        json e        = io::element_to_json(ctx, x);
        line["support"] = e["support"];
        line["min_rep"] = e["min_rep"];
        s << (index ? "\n" : "") << index << "  " << e["support"].get<std::string>();
        o.lines.push_back(line);
        ++index;
      }
      o.payload["count"] = o.lines.size();
      o.summary          = s.str();
      return o;
    }

    Outcome cp_compare(json const& in) {
      CPContext const ctx = context_of(in);
      CPElement const x   = io::parse_element(ctx, in.at("x"));
      CPElement const y   = io::parse_element(ctx, in.at("y"));
      int const       c   = ctx.compare(x, y);
      auto const      t   = ctx.highest_difference(x, y);
      Outcome         o;
      o.payload["x"]       = io::element_to_json(ctx, x);
      o.payload["y"]       = io::element_to_json(ctx, y);
      o.payload["compare"] = c;
      o.payload["highest_difference"] = t ? json(*t) : json(nullptr);
      o.payload["index_x"]            = ctx.index_of(x);
      o.payload["index_y"]            = ctx.index_of(y);
      o.summary = io::element_literal(ctx, x) + (c < 0 ? " < " : c > 0 ? " > " : " = ")
                  + io::element_literal(ctx, y);
      return o;
    }

    Outcome cp_mul(json const& in) {
      CPContext const ctx = context_of(in);
      CPElement const x   = io::parse_element(ctx, in.at("x"));
      CPElement const y   = io::parse_element(ctx, in.at("y"));
      CPElement const xy  = ctx.multiply(x, y);
      Outcome         o;
      o.payload["product"] = io::element_to_json(ctx, xy);
      o.summary            = io::element_literal(ctx, xy);
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // aut
    ////////////////////////////////////////////////////////////////////////

    Outcome aut_apply(json const& in) {
      CPContext const ctx = context_of(in);
      AutWord const   w   = io::aut_word_from_json(in.at("word"));
      CPElement const x   = io::parse_element(ctx, in.at("x"));
      CPElement const y   = apply_word(ctx, w, x);
      Outcome         o;
      o.payload["image"] = io::element_to_json(ctx, y);
      o.summary          = io::element_literal(ctx, y);
      return o;
    }

    Outcome aut_verify(json const& in) {
      CPContext const ctx = context_of(in);
      AutWord const   w   = io::aut_word_from_json(in.at("word"));
      AutReport const r   = verify_automorphism(ctx, w, in.at("n").get<std::size_t>(),
                                              in.at("pair_budget").get<std::size_t>(),
                                              in.at("seed").get<std::uint64_t>());
      Outcome o;
      o.payload["report"] = io::aut_report_to_json(ctx, r);
      o.code              = r.ok ? exit_ok : exit_falsified;
      o.summary = std::string(r.ok ? "automorphism" : "NOT an automorphism: " + r.failure)
                  + " (" + std::to_string(r.elements_checked) + " elements, "
                  + std::to_string(r.pairs_checked) + " pairs"
                  + (r.exhaustive_pairs ? ", exhaustive)" : ", sampled)");
      return o;
    }

    Outcome aut_alpha(json const& in) {
      CPContext const ctx = context_of(in);
      AutWord const   w   = alpha_word(ctx, in.at("I").get<std::vector<Coord>>(),
                                   in.at("i0").get<Coord>(), in.at("j0").get<Coord>());
      Outcome o;
      o.payload["word"] = io::aut_word_to_json(w);
      o.summary         = o.payload["word"].dump();
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // wqo
    ////////////////////////////////////////////////////////////////////////

    Outcome wqo_relation(json const& in, bool star) {
      io::Alphabet a;
      Word const   w1 = a.parse(in.at("w1"));
      Word const   w2 = a.parse(in.at("w2"));
      auto const   f  = star ? is_star_embedded(w1, w2) : is_subword(w1, w2);
      Outcome      o;
      o.payload["embedded"] = f.has_value();
      o.payload["f"]        = f ? one_based(*f) : json(nullptr);
      o.code                = f ? exit_ok : exit_falsified;
      o.summary = f ? "embedding (" + join(o.payload["f"]) + ")" : "not embedded";
      return o;
    }

    Outcome wqo_pair(json const& in) {
      io::Alphabet      a;
      std::vector<Word> words;
      for (auto const& w : in.at("words")) {
        words.push_back(a.parse(w.get<std::string>()));
      }
      std::string const mode = in.at("mode");
      if (mode != "star" && mode != "higman") {
        throw InputError("mode is 'star' or 'higman'");
      }
      PairMode const pm   = mode == "star" ? PairMode::star : PairMode::higman;
      std::size_t    next = 0;
      auto const     pair = find_increasing_pair(
          [&]() -> std::optional<Word> {
            if (next == words.size()) {
              return std::nullopt;
            }
            return words[next++];
          },
          pm, in.at("max_words").get<std::size_t>());
      Outcome o;
      if (!pair) {
        o.payload["found"] = false;
        o.code             = exit_insufficient;
        o.summary          = "no increasing pair among " + std::to_string(next) + " words";
        return o;
      }
      bool const valid = pm == PairMode::star
                             ? is_star_embedding(words[pair->i], words[pair->j], pair->f)
                             : is_subword_embedding(words[pair->i], words[pair->j], pair->f);
      o.payload["found"]         = true;
      o.payload["i"]             = pair->i + 1;
      o.payload["j"]             = pair->j + 1;
      o.payload["w_i"]           = a.format(words[pair->i]);
      o.payload["w_j"]           = a.format(words[pair->j]);
      o.payload["f"]             = one_based(pair->f);
      o.payload["words_read"]    = pair->words_read;
      o.payload["witness_valid"] = valid;
      o.code                     = valid ? exit_ok : exit_falsified;
      o.summary = "pair (" + std::to_string(pair->i + 1) + ", "
                  + std::to_string(pair->j + 1) + "), f = ("
                  + join(o.payload["f"]) + ")";
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // az
    ////////////////////////////////////////////////////////////////////////

    Outcome az_run(json const& in) {
      CPContext const      ctx = context_of(in);
      std::vector<CPTuple> family;
      for (auto const& row : in.at("family")) {
        CPTuple t;
        for (auto const& lit : row) {
          t.push_back(io::parse_element(ctx, lit.get<std::string>()));
        }
        family.push_back(std::move(t));
      }
      AzOptions opt;
      opt.depth = in.at("depth").get<std::size_t>();
      opt.seed  = in.at("seed").get<std::uint64_t>();
      AzCertificate const cert = run_az(ctx, family, opt);
      Outcome             o;
      o.payload = io::certificate_to_json(ctx, family, cert);
      o.code    = cert.ok ? exit_ok : exit_falsified;
      std::ostringstream s;
      s << (cert.ok ? "certificate green" : "FALSIFIED: " + cert.failure)
        << ": members " << cert.beta.i + 1 << " -> " << cert.beta.j + 1
        << ", l' = " << cert.bounds.l_prime << ", l = " << cert.bounds.l
        << ", word of " << cert.word.size() << " generators";
      if (!cert.order_coset_compatible) {
        s << " (element order is not coset-compatible)";
      }
      o.summary = s.str();
      return o;
    }

    ////////////////////////////////////////////////////////////////////////
    // rado
    ////////////////////////////////////////////////////////////////////////

    Outcome rado_report(std::vector<Triple> const& triples) {
      ObstructionReport const r = check_obstruction(triples);
      Outcome                 o;
      o.payload = io::triples_to_json(triples, r);
      o.code    = r.ok ? exit_ok : exit_falsified;
      std::ostringstream s;
      for (Triple const& t : triples) {
        s << "n=" << t.n << "  b=" << t.b.to_string() << "  c=" << t.c.to_string()
          << "\n";
      }
      s << (r.ok ? "no violations" : std::to_string(r.violations.size()) + " violations");
      o.summary = s.str();
      return o;
    }

    Outcome rado_triples(json const& in) {
      return rado_report(build_triples(in.at("max_n").get<std::size_t>()));
    }

    Outcome rado_check(json const& in) {
      if (in.contains("triples")) {
        return rado_report(io::triples_from_json(in));
      }
      return rado_triples(in);
    }

    std::map<std::string, Handler> const& handlers() {
      static std::map<std::string, Handler> const h{
          {"group check", group_check},
          {"group rank", group_rank},
          {"group export", group_export},
          {"qs from-group", qs_from_group_cmd},
          {"qs to-group", qs_to_group_cmd},
          {"qs amalgam", qs_amalgam_cmd},
          {"cp enumerate", cp_enumerate},
          {"cp compare", cp_compare},
          {"cp mul", cp_mul},
          {"aut apply", aut_apply},
          {"aut verify", aut_verify},
          {"aut alpha", aut_alpha},
          {"wqo subword", [](json const& in) { return wqo_relation(in, false); }},
          {"wqo star", [](json const& in) { return wqo_relation(in, true); }},
          {"wqo pair", wqo_pair},
          {"az run", az_run},
          {"rado triples", rado_triples},
          {"rado check", rado_check},
      };
      return h;
    }

    json full_payload(std::string const& command, json const& inputs, Outcome const& o) {
      json p;
      p["command"] = command;
      p["inputs"]  = inputs;
      for (auto const& [k, v] : o.payload.items()) {
        p[k] = v;
      }
      return p;
    }

    // Recompute a certificate from its recorded inputs and compare.
    int verify_file(std::string const& path, bool as_json, std::ostream& out) {
      json const cert = io::read_json_file(path);
      if (!cert.is_object() || !cert.contains("command") || !cert.contains("inputs")) {
        throw InputError("'" + path + "' is not an emitted certificate");
      }
      std::string const command = cert["command"];
      auto const        h       = handlers().find(command);
      if (h == handlers().end()) {
        throw InputError("unknown command '" + command + "' in certificate");
      }
      std::vector<std::string> reasons;
      Outcome const            o      = h->second(cert["inputs"]);
      json const               redone = full_payload(command, cert["inputs"], o);
      if (redone.dump() != cert.dump()) {
        reasons.emplace_back("recomputed payload differs from the file");
      }
      if (o.code != exit_ok) {
        reasons.emplace_back("recomputed result is not a success (exit "
                             + std::to_string(o.code) + ")");
      }
      // independent re-checks of the recorded witness
      if (command == "az run" && cert.contains("word")) {
        CPContext const ctx = context_of(cert["inputs"]);
        AutWord const   w   = io::aut_word_from_json(cert["word"]);
        auto const&     fam = cert["inputs"]["family"];
        std::size_t const i = cert["beta"]["i"], j = cert["beta"]["j"];
        for (std::size_t c = 0; c < fam[i].size(); ++c) {
          CPElement const x = io::parse_element(ctx, fam[i][c]);
          CPElement const y = io::parse_element(ctx, fam[j][c]);
          if (!(apply_word(ctx, w, x) == y)) {
            reasons.push_back("the recorded word does not map component "
                              + std::to_string(c) + " of a_i to a_j");
          }
        }
      }
      if (command == "wqo pair" && cert.value("found", false)) {
        io::Alphabet a;
        Word const   wi = a.parse(cert["w_i"]);
        Word const   wj = a.parse(cert["w_j"]);
        Embedding    f;
        for (auto const& p : cert["f"]) {
          f.push_back(p.get<std::size_t>() - 1);
        }
        bool const star = cert["inputs"]["mode"] == "star";
        if (!(star ? is_star_embedding(wi, wj, f) : is_subword_embedding(wi, wj, f))) {
          reasons.emplace_back("the recorded embedding is not valid");
        }
      }
      if (command.rfind("rado", 0) == 0 && cert.contains("triples")) {
        if (!check_obstruction(io::triples_from_json(cert)).ok) {
          reasons.emplace_back("the recorded triples violate the obstruction");
        }
      }
      json v;
      v["verified"] = reasons.empty();
      v["command"]  = command;
      v["reasons"]  = reasons;
      if (as_json) {
        out << v.dump(2) << "\n";
      } else {
        out << (reasons.empty() ? "verified: " + command
                                : "NOT verified: " + command)
            << "\n";
        for (auto const& r : reasons) {
          out << "  " << r << "\n";
        }
      }
      return reasons.empty() ? exit_ok : exit_falsified;
    }

    std::string require(std::string const& value, char const* flag) {
      if (value.empty()) {
        throw InputError(std::string("missing ") + flag);
      }
      return value;
    }

    json load_json_arg(std::string const& path, char const* flag) {
      return io::read_json_file(require(path, flag));
    }

    std::vector<std::string> read_lines(std::string const& path) {
      std::istringstream       in(io::read_text_file(path));
      std::vector<std::string> out;
      std::string              line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (!line.empty() && line[0] != '#') {
          out.push_back(line);
        }
      }
      return out;
    }
  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    CLI::App app{"Workbench for central products, quadratic structures, "
                 "*-embeddings and the random-graph adversary",
                 "azbench"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::uint64_t seed = 1;
    bool          as_json = false;
    std::string   verify;
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_flag("--json", as_json, "Print JSON instead of a summary");
    app.add_option("--verify", verify, "Re-validate an emitted certificate");

    // flags shared by several subcommands
    std::string group, file, tuples, word, qs, qs0, qs1, qs2, e1, e2, x, y, w1, w2,
        stream, emit, mode = "star";
    std::vector<int>   k_override, order_hint;
    std::vector<Coord> coords;
    std::uint64_t      count = 8, n = 4, pairs = 100000, depth = 500, max_n = 6,
                  max_words = 10000, i0 = 0, j0 = 0;

    std::string command;
    auto        sub = [&](CLI::App* parent, std::string const& name,
                   std::string const& desc) {
      CLI::App* s = parent->add_subcommand(name, desc);
      s->callback([&command, parent, name] { command = parent->get_name() + " " + name; });
      s->add_option("--emit", emit, "Also write the result to this file");
      return s;
    };
    auto with_group = [&](CLI::App* s) {
      s->add_option("--group,--file", group, "Group file or bundled group name");
      s->add_option("--k", k_override, "Override K (element indices)")->delimiter(',');
      s->add_option("--order", order_hint, "Element order hint (indices)")->delimiter(',');
      return s;
    };

    CLI::App* g = app.add_subcommand("group", "Group tables");
    g->require_subcommand(1);
    with_group(sub(g, "check", "Validate and analyse a table"));
    with_group(sub(g, "rank", "Smallest generating set size"));
    with_group(sub(g, "export", "Write a group as JSON"));

    CLI::App* q = app.add_subcommand("qs", "Quadratic structures");
    q->require_subcommand(1);
    with_group(sub(q, "from-group", "QS(G) of a class group"));
    sub(q, "to-group", "G(QS) of a quadratic structure")->add_option("--qs", qs, "QS file");
    {
      CLI::App* a = sub(q, "amalgam", "Free amalgam of qs1 and qs2 over qs0");
      a->add_option("--qs0", qs0, "Common substructure");
      a->add_option("--qs1", qs1, "First factor");
      a->add_option("--qs2", qs2, "Second factor");
      a->add_option("--e1", e1, "Morphism qs0 -> qs1 (default: inclusion)");
      a->add_option("--e2", e2, "Morphism qs0 -> qs2 (default: inclusion)");
    }

    CLI::App* c = app.add_subcommand("cp", "Central products G(omega; K)");
    c->require_subcommand(1);
    with_group(sub(c, "enumerate", "First elements of the enumeration"))
        ->add_option("--count", count, "Number of elements");
    for (auto const& [name, desc] : {std::pair{"compare", "Order of two elements"},
                                     std::pair{"mul", "Product of two elements"}}) {
      CLI::App* s = with_group(sub(c, name, desc));
      s->add_option("--x", x, "Element literal");
      s->add_option("--y", y, "Element literal");
    }

    CLI::App* au = app.add_subcommand("aut", "Automorphism words");
    au->require_subcommand(1);
    {
      CLI::App* s = with_group(sub(au, "apply", "Apply a word to an element"));
      s->add_option("--word", word, "Word file");
      s->add_option("--x", x, "Element literal");
      s = with_group(sub(au, "verify", "Check a word on Gamma_n"));
      s->add_option("--word", word, "Word file");
      s->add_option("--n", n, "Level n (support < n)");
      s->add_option("--pairs", pairs, "Pair budget");
      s = with_group(sub(au, "alpha", "The word alpha_{I, i0, j0}"));
      s->add_option("--I", coords, "Coordinates of I")->delimiter(',');
      s->add_option("--i0", i0, "Coordinate i0");
      s->add_option("--j0", j0, "Coordinate j0");
    }

    CLI::App* wq = app.add_subcommand("wqo", "Words and embeddings");
    wq->require_subcommand(1);
    for (auto const& [name, desc] : {std::pair{"subword", "Higman subword embedding"},
                                     std::pair{"star", "*-embedding"}}) {
      CLI::App* s = sub(wq, name, desc);
      s->add_option("--w1", w1, "Source word (comma-separated letters)");
      s->add_option("--w2", w2, "Target word");
    }
    {
      CLI::App* s = sub(wq, "pair", "First increasing pair of a stream");
      s->add_option("--stream", stream, "File, one word per line");
      s->add_option("--mode", mode, "star or higman");
      s->add_option("--max", max_words, "Word cap");
    }

    CLI::App* az = app.add_subcommand("az", "Order-preserving maps from *-embeddings");
    az->require_subcommand(1);
    {
      CLI::App* s = with_group(sub(az, "run", "Run the pipeline on a family"));
      s->add_option("--tuples", tuples, "Family file, one tuple per line");
      s->add_option("--depth", depth, "Enumerated prefix for order checks");
    }

    CLI::App* ra = app.add_subcommand("rado", "Random-graph adversary");
    ra->require_subcommand(1);
    sub(ra, "triples", "Build the triples")->add_option("--max-n", max_n, "Largest n");
    {
      CLI::App* s = sub(ra, "check", "Check the obstruction");
      s->add_option("--max-n", max_n, "Largest n");
      s->add_option("--triples", file, "Triples file instead of --max-n");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "azbench: " << e.what() << "\n\n" << app.help();
      return exit_bad_input;
    }

    try {
      if (!verify.empty()) {
        return verify_file(verify, as_json, out);
      }
      if (command.empty()) {
        err << app.help();
        return exit_bad_input;
      }

      json inputs;
      auto add_group = [&] {
        io::GroupFile gf = io::load_group(require(group, "--group"));
        if (!k_override.empty()) {
          gf.k = k_override;
        }
        if (!order_hint.empty()) {
          gf.element_order = order_hint;
        }
        inputs["group"] = io::group_to_json(gf.group, gf.k, gf.element_order);
      };
      if (command.rfind("group", 0) == 0 || command == "qs from-group"
          || command.rfind("cp", 0) == 0 || command.rfind("aut", 0) == 0
          || command == "az run") {
        add_group();
      }
      if (command == "qs to-group") {
        inputs["qs"] = load_json_arg(qs, "--qs");
      } else if (command == "qs amalgam") {
        inputs["qs0"] = load_json_arg(qs0, "--qs0");
        inputs["qs1"] = load_json_arg(qs1, "--qs1");
        inputs["qs2"] = load_json_arg(qs2, "--qs2");
        if (!e1.empty()) {
          inputs["e1"] = io::read_json_file(e1);
        }
        if (!e2.empty()) {
          inputs["e2"] = io::read_json_file(e2);
        }
      } else if (command == "cp enumerate") {
        inputs["count"] = count;
      } else if (command == "cp compare" || command == "cp mul") {
        inputs["x"] = require(x, "--x");
        inputs["y"] = require(y, "--y");
      } else if (command == "aut apply") {
        inputs["word"] = load_json_arg(word, "--word");
        inputs["x"]    = require(x, "--x");
      } else if (command == "aut verify") {
        inputs["word"]        = load_json_arg(word, "--word");
        inputs["n"]           = n;
        inputs["pair_budget"] = pairs;
        inputs["seed"]        = seed;
      } else if (command == "aut alpha") {
        inputs["I"]  = coords;
        inputs["i0"] = i0;
        inputs["j0"] = j0;
      } else if (command == "wqo subword" || command == "wqo star") {
        inputs["w1"] = w1;
        inputs["w2"] = w2;
      } else if (command == "wqo pair") {
        inputs["words"]     = read_lines(require(stream, "--stream"));
        inputs["mode"]      = mode;
        inputs["max_words"] = max_words;
      } else if (command == "az run") {
        json fam = json::array();
        for (std::string const& line : read_lines(require(tuples, "--tuples"))) {
          std::string norm = line;
          std::replace(norm.begin(), norm.end(), ';', ' ');
          std::istringstream parts(norm);
          json               row = json::array();
          std::string        lit;
          while (parts >> lit) {
            row.push_back(lit);
          }
          if (!row.empty()) {
            fam.push_back(row);
          }
        }
        inputs["family"] = fam;
        inputs["depth"]  = depth;
        inputs["seed"]   = seed;
      } else if (command == "rado triples") {
        inputs["max_n"] = max_n;
      } else if (command == "rado check") {
        if (!file.empty()) {
          inputs["triples"] = io::read_json_file(file).at("triples");
        } else {
          inputs["max_n"] = max_n;
        }
      }

      Outcome const o = handlers().at(command)(inputs);
      if (command == "cp enumerate") {
        std::string text;
        for (json const& line : o.lines) {
          text += line.dump() + "\n";
        }
        if (!emit.empty()) {
          io::write_text_file(emit, text);
        }
        out << (as_json ? text : o.summary + "\n");
        return o.code;
      }
      json const payload = full_payload(command, inputs, o);
      if (!emit.empty()) {
        io::write_text_file(emit, payload.dump(2) + "\n");
      }
      out << (as_json ? payload.dump(2) : o.summary) << "\n";
      return o.code;
    } catch (InsufficientFamily const& e) {
      err << "azbench: insufficient input: " << e.what() << "\n";
      return exit_insufficient;
    } catch (StructuralError const& e) {
      auto const& t = e.triple();
      err << "azbench: " << e.what() << " (triple " << t[0] << ", " << t[1] << ", "
          << t[2] << ")\n";
      return exit_bad_input;
    } catch (Error const& e) {
      err << "azbench: " << e.what() << "\n";
      return exit_bad_input;
    } catch (io::json::exception const& e) {
      err << "azbench: malformed JSON input: " << e.what() << "\n";
      return exit_bad_input;
    }
  }

}  // namespace azbench
