#include "shortdiff/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace shortdiff::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::Parse, "schema", json{{"path", path.empty() ? "/" : path}}, message + " at " + (path.empty() ? "/" : path));
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path + "/" + key, "missing field '" + key + "'");
  return *it;
}

long long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<long long>();
}

int small_int(const json& j, const std::string& path) {
  const long long x = integer(j, path);
  if (x < -(1LL << 30) || x > (1LL << 30)) schema(path, "integer out of range");
  return static_cast<int>(x);
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(small_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::string kind_of(const json& spec, const std::string& path) {
  const json& k = field(spec, "kind", path);
  if (!k.is_string()) schema(path + "/kind", "expected a string");
  return k.get<std::string>();
}

Block parse_block(const json& j, int v, const std::string& path) {
  const std::vector<int> elems = int_list(j, path);
  if (elems.empty()) schema(path, "block must be nonempty");
  std::set<int> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0 || elems[i] >= v) schema(path + "/" + std::to_string(i), "point outside [0, v)");
    if (!seen.insert(elems[i]).second) schema(path + "/" + std::to_string(i), "point repeated in block");
  }
  return Block(elems);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "read", json{{"path", path}}, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "write", json{{"path", path}}, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorKind::Io, "write", json{{"path", path}}, "write failed for " + path);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "json", json{{"source", source}, {"byte", e.byte}}, source + ": " + e.what());
  }
}

GroupContext parse_group(const json& spec, const std::string& path) {
  const std::string kind = kind_of(spec, path);
  if (kind == "cyclic") return {FiniteGroup::cyclic(small_int(field(spec, "n", path), path + "/n")), std::nullopt, spec};
  if (kind == "elementary_abelian")
    return {FiniteGroup::elementary_abelian(small_int(field(spec, "p", path), path + "/p"),
                                            small_int(field(spec, "k", path), path + "/k")),
            std::nullopt, spec};
  if (kind == "product") {
    const json& fs = field(spec, "factors", path);
    if (!fs.is_array()) schema(path + "/factors", "expected an array");
    std::vector<FiniteGroup> factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
      factors.push_back(parse_group(fs[i], path + "/factors/" + std::to_string(i)).group);
    return {FiniteGroup::direct_product(factors), std::nullopt, spec};
  }
  if (kind == "cayley") return {FiniteGroup::from_cayley(int_matrix(field(spec, "table", path), path + "/table")), std::nullopt, spec};
  if (kind == "field") {
    std::optional<Poly> modulus;
    if (spec.contains("modulus")) modulus = int_list(spec["modulus"], path + "/modulus");
    FiniteField f = FiniteField::build(small_int(field(spec, "p", path), path + "/p"),
                                       small_int(field(spec, "n", path), path + "/n"), modulus);
    return {f.additive_group(), f, spec};
  }
  schema(path + "/kind", "unknown group kind '" + kind + "'");
}

Endomorphism parse_endo(const GroupContext& ctx, const json& spec, const std::string& path) {
  const std::string kind = kind_of(spec, path);
  if (kind == "table") {
    std::vector<int> t = int_list(field(spec, "map", path), path + "/map");
    return Endomorphism::make(ctx.group, std::vector<Element>(t.begin(), t.end()));
  }
  if (kind == "scalar") return scalar_endo(ctx.group, integer(field(spec, "c", path), path + "/c"));
  if (kind == "matrix") return matrix_endo(ctx.group, int_matrix(field(spec, "entries", path), path + "/entries"));
  if (kind == "field_mult") {
    if (!ctx.field) schema(path, "field_mult needs a group of kind 'field'");
    return field_mult_endo(*ctx.field, ctx.field->element(int_list(field(spec, "element", path), path + "/element")));
  }
  if (kind == "zero") return Endomorphism::zero(ctx.group);
  if (kind == "identity") return Endomorphism::identity(ctx.group);
  schema(path + "/kind", "unknown endomorphism kind '" + kind + "'");
}

std::vector<Endomorphism> parse_endo_list(const GroupContext& ctx, const json& spec, const std::string& path) {
  if (!spec.is_array()) schema(path, "expected an array of endomorphism specs");
  std::vector<Endomorphism> out;
  for (std::size_t i = 0; i < spec.size(); ++i) out.push_back(parse_endo(ctx, spec[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<FieldElement> parse_field_elements(const FiniteField& f, const json& spec, const std::string& path) {
  if (!spec.is_array()) schema(path, "expected an array of coefficient lists");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < spec.size(); ++i)
    out.push_back(f.element(int_list(spec[i], path + "/" + std::to_string(i))));
  return out;
}

FamilyFile parse_family(const json& doc) {
  GroupContext ctx = parse_group(field(doc, "group", ""), "/group");
  const json& entries = field(doc, "entries", "");
  if (!entries.is_array()) schema("/entries", "expected an array");
  std::vector<Entry> out;
  std::set<Label> labels;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = "/entries/" + std::to_string(i);
    const Label label = integer(field(entries[i], "label", p), p + "/label");
    if (!labels.insert(label).second) schema(p + "/label", "duplicate label");
    out.push_back(Entry{label, parse_block(field(entries[i], "block", p), ctx.group.order(), p + "/block")});
  }
  if (out.empty()) schema("/entries", "family has no entries");
  return FamilyFile{std::move(ctx), LabeledFamily(std::move(out))};
}

json family_to_json(const json& group_spec, const LabeledFamily& family) {
  json entries = json::array();
  for (const auto& e : family.entries()) entries.push_back(json{{"label", e.label}, {"block", e.block.elements}});
  return json{{"group", group_spec}, {"entries", entries}};
}

json certificate_to_json(const SdfCertificate& c) {
  return json{{"v", c.v},
              {"k", c.k},
              {"mu", c.mu},
              {"nu", c.nu},
              {"lambda_prime", c.lambda_prime},
              {"lambda", c.lambda},
              {"witness",
               {{"label", c.reference_label}, {"stabilizer", c.reference_stabilizer}, {"class", c.reference_class}}}};
}

std::string certificate_to_text(const SdfCertificate& c) {
  std::ostringstream ss;
  ss << "sdf " << c.v << ' ' << c.k << ' ' << c.mu << ' ' << c.nu << ' ' << c.lambda_prime << ' ' << c.lambda << '\n';
  return ss.str();
}

DesignFile parse_design(const std::string& contents, const std::string& source) {
  const auto first = contents.find_first_not_of(" \t\r\n");
  DesignFile d;
  if (first != std::string::npos && contents[first] == '{') {
    const json doc = parse_json(contents, source);
    d.v = small_int(field(doc, "v", ""), "/v");
    if (d.v < 2) schema("/v", "v must be at least 2");
    if (doc.contains("k")) d.k = small_int(doc["k"], "/k");
    if (doc.contains("lambda")) d.lambda = integer(doc["lambda"], "/lambda");
    const json& blocks = field(doc, "blocks", "");
    if (!blocks.is_array()) schema("/blocks", "expected an array");
    for (std::size_t i = 0; i < blocks.size(); ++i)
      d.blocks.push_back(parse_block(blocks[i], d.v, "/blocks/" + std::to_string(i)));
    return d;
  }

  std::istringstream in(contents);
  std::string line;
  int lineno = 0;
  auto where = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse, "text-design", json{{"source", source}, {"line", lineno}},
                source + ":" + std::to_string(lineno) + ": " + msg);
  };
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) where("not an integer: '" + tok + "'");
      } catch (const std::logic_error&) {
        where("not an integer: '" + tok + "'");
      }
    }
    if (!header) {
      if (nums.size() != 4) where("header must be 'v k lambda b'");
      if (nums[0] < 2 || nums[0] > FiniteGroup::kMaxOrder) where("v out of range");
      d.v = static_cast<int>(nums[0]);
      d.k = static_cast<int>(nums[1]);
      d.lambda = nums[2];
      d.b = static_cast<std::size_t>(nums[3]);
      header = true;
      continue;
    }
    std::set<long long> seen;
    std::vector<Element> elems;
    for (long long x : nums) {
      if (x < 0 || x >= d.v) where("point outside [0, v)");
      if (!seen.insert(x).second) where("point repeated in block");
      elems.push_back(static_cast<Element>(x));
    }
    d.blocks.emplace_back(std::move(elems));
  }
  if (!header) where("missing header");
  return d;
}

json design_to_json(const Design& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(b.elements);
  return json{{"v", d.v}, {"k", d.k}, {"lambda", d.lambda}, {"blocks", blocks}};
}

std::string design_to_text(const Design& d) {
  std::ostringstream ss;
  ss << d.v << ' ' << d.k << ' ' << d.lambda << ' ' << d.blocks.size() << '\n';
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) ss << (i ? " " : "") << b.elements[i];
    ss << '\n';
  }
  return ss.str();
}

}  // namespace shortdiff::io
