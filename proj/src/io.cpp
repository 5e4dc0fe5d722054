#include "azbench/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "azbench/error.hpp"

namespace azbench::io {

  namespace {
    template <typename T>
    T get(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
      }
    }

    std::string trim(std::string const& s) {
      auto const b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        out.push_back(trim(cur));
      }
      if (!s.empty() && s.back() == sep) {
        out.emplace_back();
      }
      return out;
    }

    std::uint64_t parse_u64(std::string const& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
          })) {
        throw InputError("expected a non-negative integer, got '" + s + "'");
      }
      try {
        return std::stoull(s);
      } catch (std::exception const&) {
        throw InputError("integer out of range: '" + s + "'");
      }
    }
  }  // namespace

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw InputError("'" + path + "': " + e.what());
    }
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw InputError("cannot write '" + path + "'");
    }
    out << text;
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  GroupFile group_from_json(json const& j) {
    auto const name  = get<std::string>(j, "name");
    auto const order = get<std::size_t>(j, "order");
    auto const names = get<std::vector<std::string>>(j, "elements");
    auto const mul   = get<std::vector<std::vector<int>>>(j, "mul");
    if (names.size() != order || mul.size() != order) {
      throw InputError("group '" + name + "': order does not match the table");
    }
    GroupFile gf{GroupTable::from_table(name, names, mul), {}, std::nullopt};
    if (j.contains("K")) {
      gf.k = get<std::vector<int>>(j, "K");
    }
    if (j.contains("element_order")) {
      gf.element_order = get<std::vector<int>>(j, "element_order");
    }
    return gf;
  }

  json group_to_json(GroupTable const&               g,
                     std::vector<int> const&         k,
                     std::optional<std::vector<int>> element_order) {
    json j;
    j["name"]     = g.name();
    j["order"]    = g.order();
    j["elements"] = g.names();
    j["mul"]      = g.table();
    j["K"]        = k;
    if (element_order) {
      j["element_order"] = *element_order;
    }
    return j;
  }

  GroupFile load_group(std::string const& path_or_name) {
    if (std::filesystem::exists(path_or_name)) {
      return group_from_json(read_json_file(path_or_name));
    }
    for (auto const& e : bundled_groups()) {
      if (e.group.name() == path_or_name) {
        return {e.group, e.k, std::nullopt};
      }
    }
    throw InputError("'" + path_or_name
                     + "' is neither a readable file nor a bundled group");
  }

  KGroupSpec kgroup_of(GroupFile const& gf) {
    std::vector<int> k = gf.k;
    if (k.empty()) {
      k.push_back(gf.group.identity());
    }
    return make_kgroup(gf.group, k, gf.element_order);
  }

  json names_of(GroupTable const& g, std::vector<Elem> const& elems) {
    json out = json::array();
    for (Elem a : elems) {
      out.push_back(g.name_of(a));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quadratic structures
  ////////////////////////////////////////////////////////////////////////

  QuadraticStructure qs_from_json(json const& j) {
    auto const du = get<unsigned>(j, "dimU");
    auto const dv = get<unsigned>(j, "dimV");
    auto const q  = get<std::vector<std::string>>(j, "Q");
    auto const gm = get<std::vector<std::vector<std::string>>>(j, "gamma");
    if (q.size() != du) {
      throw InputError("Q needs one bitstring per basis vector of U");
    }
    std::vector<Bits> qb;
    for (auto const& s : q) {
      qb.push_back(from_bitstring(s));
    }
    std::vector<std::vector<Bits>> gb;
    for (auto const& row : gm) {
      gb.emplace_back();
      for (auto const& s : row) {
        gb.back().push_back(from_bitstring(s));
      }
    }
    return QuadraticStructure(du, dv, std::move(qb), gb);
  }

  json qs_to_json(QuadraticStructure const& qs) {
    json j;
    j["dimU"] = qs.dim_u();
    j["dimV"] = qs.dim_v();
    json q    = json::array();
    for (Bits b : qs.q_table()) {
      q.push_back(to_bitstring(b, qs.dim_v()));
    }
    j["Q"]   = q;
    json gam = json::array();
    for (auto const& row : qs.gamma_table()) {
      json r = json::array();
      for (Bits b : row) {
        r.push_back(to_bitstring(b, qs.dim_v()));
      }
      gam.push_back(r);
    }
    j["gamma"] = gam;
    return j;
  }

  QSMorphism morphism_from_json(json const& j) {
    QSMorphism m;
    for (auto const& s : get<std::vector<std::string>>(j, "f")) {
      m.f.columns.push_back(from_bitstring(s));
    }
    for (auto const& s : get<std::vector<std::string>>(j, "g")) {
      m.g.columns.push_back(from_bitstring(s));
    }
    return m;
  }

  json morphism_to_json(QSMorphism const& m, unsigned dim_u, unsigned dim_v) {
    json j;
    json f = json::array(), g = json::array();
    for (Bits b : m.f.columns) {
      f.push_back(to_bitstring(b, dim_u));
    }
    for (Bits b : m.g.columns) {
      g.push_back(to_bitstring(b, dim_v));
    }
    j["f"] = f;
    j["g"] = g;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Central products, words, families
  ////////////////////////////////////////////////////////////////////////

  CPElement parse_element(CPContext const& ctx, std::string const& literal) {
    std::string const t = trim(literal);
    if (t.empty() || t == "1") {
      return ctx.identity();
    }
    Support s;
    for (std::string const& part : split(t, ',')) {
      auto const colon = part.find(':');
      if (colon == std::string::npos) {
        throw InputError("element literal '" + literal
                         + "': expected i:NAME, got '" + part + "'");
      }
      Coord const      c    = parse_u64(trim(part.substr(0, colon)));
      std::string const name = trim(part.substr(colon + 1));
      auto const        a    = ctx.group().find(name);
      if (!a) {
        throw InputError("element literal '" + literal + "': unknown element '"
                         + name + "'");
      }
      s.emplace_back(c, *a);
    }
    return ctx.make(s);
  }

  std::string element_literal(CPContext const& ctx, CPElement const& x) {
    std::vector<Elem> const rep = ctx.minimal_representative(x);
    std::string             out;
    for (std::size_t c = 0; c < rep.size(); ++c) {
      if (rep[c] == ctx.group().identity()) {
        continue;
      }
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(c) + ':' + ctx.group().name_of(rep[c]);
    }
    return out.empty() ? "1" : out;
  }

  json element_to_json(CPContext const& ctx, CPElement const& x) {
    json j;
    j["support"] = element_literal(ctx, x);
    j["min_rep"] = names_of(ctx.group(), ctx.minimal_representative(x));
    return j;
  }

  std::vector<CPTuple> parse_tuples(CPContext const& ctx, std::istream& in) {
    std::vector<CPTuple> out;
    std::string          line;
    std::size_t          arity = 0;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
      std::string const t = trim(line);
      if (t.empty() || t[0] == '#') {
        continue;
      }
      std::string norm = t;
      std::replace(norm.begin(), norm.end(), ';', ' ');
      std::istringstream parts(norm);
      CPTuple            tuple;
      std::string        lit;
      while (parts >> lit) {
        tuple.push_back(parse_element(ctx, lit));
      }
      if (out.empty()) {
        arity = tuple.size();
      } else if (tuple.size() != arity) {
        throw InputError("line " + std::to_string(lineno) + ": tuple has "
                         + std::to_string(tuple.size()) + " components, expected "
                         + std::to_string(arity));
      }
      out.push_back(std::move(tuple));
    }
    return out;
  }

  AutWord aut_word_from_json(json const& j) {
    if (!j.is_array()) {
      throw InputError("an automorphism word is a JSON array");
    }
    AutWord w;
    for (json const& g : j) {
      if (g.is_object() && g.contains("perm")) {
        w.emplace_back(Perm::from_cycles(
            get<std::vector<std::vector<Coord>>>(g, "perm")));
      } else if (g.is_object() && g.contains("beta")) {
        w.emplace_back(BetaStar{get<std::vector<Coord>>(g, "beta")});
      } else {
        throw InputError("word entries are {\"perm\": ...} or {\"beta\": ...}");
      }
    }
    return w;
  }

  json aut_word_to_json(AutWord const& w) {
    json out = json::array();
    for (AutGenerator const& g : w) {
      json e;
      if (auto const* p = std::get_if<Perm>(&g)) {
        e["perm"] = p->cycles();
      } else {
        e["beta"] = std::get<BetaStar>(g).coords;
      }
      out.push_back(e);
    }
    return out;
  }

  Word Alphabet::parse(std::string const& text) {
    Word w;
    if (trim(text).empty()) {
      return w;
    }
    for (std::string const& tok : split(text, ',')) {
      if (tok.empty()) {
        throw InputError("empty letter in word '" + text + "'");
      }
      auto [it, fresh] = _ids.emplace(tok, static_cast<Letter>(_names.size()));
      if (fresh) {
        _names.push_back(tok);
      }
      w.push_back(it->second);
    }
    return w;
  }

  std::string Alphabet::format(Word const& w) const {
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
      out += (p ? "," : "") + name(w[p]);
    }
    return out;
  }

  json aut_report_to_json(CPContext const& ctx, AutReport const& r) {
    json j;
    j["ok"]                         = r.ok;
    j["representative_independent"] = r.representative_independent;
    j["injective"]                  = r.injective;
    j["homomorphism"]               = r.homomorphism;
    j["level_preserved"]            = r.level_preserved;
    j["exhaustive_elements"]        = r.exhaustive_elems;
    j["exhaustive_pairs"]           = r.exhaustive_pairs;
    j["elements_checked"]           = r.elements_checked;
    j["pairs_checked"]              = r.pairs_checked;
    j["failure"]                    = r.failure;
    json w                          = json::array();
    for (CPElement const& x : r.witness) {
      w.push_back(element_literal(ctx, x));
    }
    j["witness"] = w;
    json reps    = json::array();
    for (auto const& rep : r.witness_reps) {
      reps.push_back(names_of(ctx.group(), rep));
    }
    j["witness_representatives"] = reps;
    return j;
  }

  json certificate_to_json(CPContext const&            ctx,
                           std::vector<CPTuple> const& family,
                           AzCertificate const&        cert) {
    json j;
    std::vector<int> order;
    for (Elem a : ctx.kg().element_order()) {
      order.push_back(a);
    }
    std::vector<int> k(ctx.kg().k().begin(), ctx.kg().k().end());
    j["group"] = group_to_json(ctx.group(), k, order);
    json fam   = json::array();
    for (CPTuple const& t : family) {
      json row = json::array();
      for (CPElement const& x : t) {
        row.push_back(element_literal(ctx, x));
      }
      fam.push_back(row);
    }
    j["family"] = fam;
    j["ok"]     = cert.ok;
    j["failure"] = cert.failure;

    json nf;
    nf["kept"] = cert.nf.kept;
    json letters = json::array();
    for (Letter a : cert.nf.alphabet) {
      letters.push_back(names_of(ctx.group(), cert.nf.letters[a]));
    }
    nf["alphabet_columns"] = letters;
    json words             = json::array();
    for (Word const& w : cert.nf.words) {
      words.push_back(w);
    }
    nf["words"]  = words;
    nf["counts"] = cert.nf.counts;
    j["normalized"] = nf;

    BetaMap const& b = cert.beta;
    json           beta;
    beta["i"]     = b.i;
    beta["j"]     = b.j;
    beta["f"]     = b.f;
    beta["len_i"] = b.len_i;
    beta["len_j"] = b.len_j;
    beta["i_s"]   = b.i_s;
    beta["I_s"]   = b.I_s;
    j["beta"]     = beta;

    j["bounds"] = {{"l_prime", cert.bounds.l_prime}, {"l", cert.bounds.l}};
    j["word"]   = aut_word_to_json(cert.word);

    json checks;
    checks["order_coset_compatible"] = cert.order_coset_compatible;
    checks["maps_tuple"]             = cert.maps_tuple;
    checks["order_preserved"]        = cert.order_preserved;
    checks["index_law"]              = cert.index_law;
    checks["word_agrees"]            = cert.word_agrees;
    checks["homomorphism"]           = cert.homomorphism;
    checks["injective"]              = cert.injective;
    checks["order_checks"]           = cert.order_checks;
    checks["index_law_checks"]       = cert.index_law_checks;
    checks["agreement_checks"]       = cert.agreement_checks;
    checks["homomorphism_checks"]    = cert.homomorphism_checks;
    j["checks"]                      = checks;
    json w                           = json::array();
    for (CPElement const& x : cert.witness) {
      w.push_back(element_literal(ctx, x));
    }
    j["witness"] = w;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rado
  ////////////////////////////////////////////////////////////////////////

  Nat parse_nat(std::string const& text) {
    std::string const t = trim(text);
    // split on top-level " + "
    std::vector<std::string> terms;
    int                      depth = 0;
    std::size_t              start = 0;
    for (std::size_t p = 0; p < t.size(); ++p) {
      depth += t[p] == '(' ? 1 : t[p] == ')' ? -1 : 0;
      if (depth == 0 && t[p] == '+') {
        terms.push_back(trim(t.substr(start, p - start)));
        start = p + 1;
      }
    }
    terms.push_back(trim(t.substr(start)));
    Nat sum(0);
    for (std::string const& term : terms) {
      Nat x;
      if (term.rfind("2^(", 0) == 0 && term.back() == ')') {
        x = Nat::pow2(parse_nat(term.substr(3, term.size() - 4)));
      } else if (term.rfind("2^", 0) == 0) {
        x = Nat::pow2(Nat(parse_u64(term.substr(2))));
      } else {
        x = Nat(parse_u64(term));
      }
      sum = Nat::disjoint_sum(sum, x);
    }
    return sum;
  }

  json triples_to_json(std::vector<Triple> const& triples,
                       ObstructionReport const&   report) {
    json j;
    j["ok"]       = report.ok;
    j["monotone"] = report.monotone;
    json ts       = json::array();
    for (std::size_t q = 0; q < triples.size(); ++q) {
      Triple const& t = triples[q];
      json          e;
      e["n"]              = t.n;
      e["a"]              = t.a.to_string();
      e["b"]              = t.b.to_string();
      e["c"]              = t.c.to_string();
      e["cycle"]          = t.cycle;
      e["minimal_prefix"] = t.minimal_prefix;
      if (q < report.triples.size()) {
        TripleCheck const& tc    = report.triples[q];
        e["cycle_induced"]       = tc.cycle_induced;
        e["neighbourhood_exact"] = tc.neighbourhood_exact;
        e["neighbourhood"]       = tc.neighbourhood;
        json smaller             = json::object();
        for (auto const& [i, cnt] : tc.smaller_cycles) {
          smaller[std::to_string(i)] = cnt;
        }
        e["smaller_cycles"] = smaller;
      }
      ts.push_back(e);
    }
    j["triples"] = ts;
    json ps      = json::array();
    for (PairObstruction const& p : report.pairs) {
      ps.push_back({{"from_n", p.from_n},
                    {"to_n", p.to_n},
                    {"images_found", p.images_found},
                    {"obstructed", p.obstructed}});
    }
    j["pairs"]      = ps;
    j["violations"] = report.violations;
    return j;
  }

  std::vector<Triple> triples_from_json(json const& j) {
    std::vector<Triple> out;
    for (json const& e : get<json>(j, "triples")) {
      Triple t;
      t.n              = get<std::size_t>(e, "n");
      t.a              = parse_nat(get<std::string>(e, "a"));
      t.b              = parse_nat(get<std::string>(e, "b"));
      t.c              = parse_nat(get<std::string>(e, "c"));
      t.cycle          = get<std::vector<std::uint64_t>>(e, "cycle");
      t.minimal_prefix = get<std::uint64_t>(e, "minimal_prefix");
      out.push_back(std::move(t));
    }
    return out;
  }

}  // namespace azbench::io
