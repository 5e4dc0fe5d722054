#ifndef AZBENCH_IO_HPP_
#define AZBENCH_IO_HPP_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "azbench/automorphisms.hpp"
#include "azbench/az_engine.hpp"
#include "azbench/central_product.hpp"
#include "azbench/groups.hpp"
#include "azbench/quadratic.hpp"
#include "azbench/rado.hpp"
#include "azbench/wqo.hpp"

namespace azbench::io {

  using json = nlohmann::ordered_json;

  // Parse errors of any kind surface as InputError.
  json read_json_file(std::string const& path);
  void write_text_file(std::string const& path, std::string const& text);
  std::string read_text_file(std::string const& path);

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  struct GroupFile {
    GroupTable                      group;
    std::vector<int>                k;
    std::optional<std::vector<int>> element_order;
  };

  // {"name", "order", "elements", "mul", "K", optional "element_order"}.
  GroupFile group_from_json(json const& j);
  json      group_to_json(GroupTable const&              g,
                          std::vector<int> const&        k,
                          std::optional<std::vector<int>> element_order = {});

  // A path to a group file, or the name of a bundled group.
  GroupFile load_group(std::string const& path_or_name);

  KGroupSpec kgroup_of(GroupFile const& gf);

  json names_of(GroupTable const& g, std::vector<Elem> const& elems);

  ////////////////////////////////////////////////////////////////////////
  // Quadratic structures
  ////////////////////////////////////////////////////////////////////////

  // {"dimU", "dimV", "Q": [bitstrings], "gamma": [[bitstrings]]}, bitstrings
  // little-endian over the basis index of V.
  QuadraticStructure qs_from_json(json const& j);
  json               qs_to_json(QuadraticStructure const& qs);

  // {"f": [bitstrings], "g": [bitstrings]}: images of basis vectors.
  QSMorphism morphism_from_json(json const& j);
  json       morphism_to_json(QSMorphism const& m, unsigned dim_u, unsigned dim_v);

  ////////////////////////////////////////////////////////////////////////
  // Central products, words, families
  ////////////////////////////////////////////////////////////////////////

  // "i:NAME,j:NAME"; "1" or the empty string is the identity.
  CPElement   parse_element(CPContext const& ctx, std::string const& literal);
  // Literal of the minimal representative.
  std::string element_literal(CPContext const& ctx, CPElement const& x);
  json        element_to_json(CPContext const& ctx, CPElement const& x);

  // One tuple per line, components separated by ';' or whitespace. Blank
  // lines and lines starting with '#' are skipped.
  std::vector<CPTuple> parse_tuples(CPContext const& ctx, std::istream& in);

  // [{"perm": [[cycles]]} | {"beta": [coords]}]
  AutWord aut_word_from_json(json const& j);
  json    aut_word_to_json(AutWord const& w);

  // Comma-separated letters, interned in order of first appearance.
  class Alphabet {
   public:
    Word parse(std::string const& text);
    std::string const& name(Letter a) const {
      return _names.at(a);
    }
    std::string format(Word const& w) const;

   private:
    std::map<std::string, Letter> _ids;
    std::vector<std::string>      _names;
  };

  json aut_report_to_json(CPContext const& ctx, AutReport const& r);
  json certificate_to_json(CPContext const&            ctx,
                           std::vector<CPTuple> const& family,
                           AzCertificate const&        cert);

  ////////////////////////////////////////////////////////////////////////
  // Rado
  ////////////////////////////////////////////////////////////////////////

  // Inverse of Nat::to_string.
  Nat  parse_nat(std::string const& text);
  json triples_to_json(std::vector<Triple> const&  triples,
                       ObstructionReport const&    report);
  std::vector<Triple> triples_from_json(json const& j);

}  // namespace azbench::io

#endif  // AZBENCH_IO_HPP_
