#include "odo/spec_io.hpp"

#include <string>

#include "odo/error.hpp"

namespace odo {

namespace {

Integer parse_integer(const Json& v, const std::string& field) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0)
      fail(Errc::InvalidArgument, field + ": \"" + s + "\" is not a decimal integer");
    return out;
  }
  fail(Errc::InvalidArgument, field + " must be an integer or a decimal string");
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    fail(Errc::InvalidArgument, where + " needs a \"" + key + "\" field");
  return obj.at(key);
}

Tail parse_tail(const Json& t) {
  if (t.is_string()) {
    if (t.get_ref<const std::string&>() == "explicit") return Tail::explicit_only();
    fail(Errc::InvalidArgument, "tail must be \"explicit\" or {\"geometric\": r}");
  }
  return Tail::geometric(parse_integer(member(t, "geometric", "tail"), "tail.geometric"));
}

}  // namespace

GroupKind parse_group_kind(std::string_view name) {
  if (name == "z" || name == "Z") return GroupKind::Z;
  if (name == "dihedral") return GroupKind::Dihedral;
  if (name == "direct_product") return GroupKind::DirectProduct;
  fail(Errc::UnknownGroupKind, "unknown group kind \"" + std::string(name) + "\"");
}

OdometerSpec parse_spec(const Json& doc) {
  if (!doc.is_object()) fail(Errc::InvalidArgument, "specification must be a JSON object");
  const Json& group = member(doc, "group", "specification");
  if (!group.is_string()) fail(Errc::UnknownGroupKind, "group must be a string");
  const GroupKind kind = parse_group_kind(group.get_ref<const std::string&>());

  const Json& chain_doc = member(doc, "chain", "specification");
  ChainSpec chain;
  if (chain_doc.is_array()) {
    std::vector<Integer> terms;
    for (const auto& t : chain_doc) terms.push_back(parse_integer(t, "chain term"));
    chain = ChainSpec::explicit_terms(std::move(terms));
  } else if (chain_doc.is_object() && chain_doc.contains("explicit")) {
    std::vector<Integer> terms;
    const Json& list = chain_doc.at("explicit");
    if (!list.is_array()) fail(Errc::InvalidArgument, "chain.explicit must be a list");
    for (const auto& t : list) terms.push_back(parse_integer(t, "chain term"));
    chain = ChainSpec::explicit_terms(std::move(terms));
  } else if (chain_doc.is_object() && chain_doc.contains("geometric")) {
    const Json& g = chain_doc.at("geometric");
    chain = ChainSpec::geometric(parse_integer(member(g, "start", "chain.geometric"), "start"),
                                 parse_integer(member(g, "ratio", "chain.geometric"), "ratio"));
  } else {
    fail(Errc::InvalidArgument, "chain must be a list, {\"explicit\": [...]} or {\"geometric\": {...}}");
  }

  std::optional<std::size_t> depth;
  if (doc.contains("depth")) {
    const Integer d = parse_integer(doc.at("depth"), "depth");
    std::size_t value = 0;
    if (d < 1 || !to_size(d, value)) fail(Errc::BadDepth, "depth must be a positive integer");
    depth = value;
  }
  const Tail tail = doc.contains("tail") ? parse_tail(doc.at("tail")) : Tail::explicit_only();
  return OdometerSpec::make(kind, std::move(chain), depth, tail);
}

OdometerSpec parse_spec_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json serialize_spec(const OdometerSpec& spec) {
  Json out;
  out["group"] = std::string(group_kind_name(spec.group()));
  const ChainSpec& c = spec.chain();
  if (c.kind == ChainSpec::Kind::Explicit) {
    Json terms = Json::array();
    for (const auto& t : c.terms) terms.push_back(integer_json(t));
    out["chain"] = {{"explicit", terms}};
  } else {
    out["chain"] = {{"geometric", {{"start", integer_json(c.start)}, {"ratio", integer_json(c.ratio)}}}};
  }
  out["depth"] = spec.depth();
  if (spec.tail().is_geometric()) out["tail"] = {{"geometric", integer_json(spec.tail().ratio)}};
  else out["tail"] = "explicit";
  return out;
}

}  // namespace odo
