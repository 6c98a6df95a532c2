#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shortdiff/constructions.hpp"
#include "shortdiff/endo.hpp"
#include "shortdiff/error.hpp"
#include "shortdiff/family.hpp"
#include "shortdiff/field.hpp"

namespace shortdiff::io {

/// A parsed group spec. `field` is set for {"kind":"field",...} specs; the
/// group is then the field's additive group.
struct GroupContext {
  FiniteGroup group;
  std::optional<FiniteField> field;
  json spec;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
/// Parse errors carry the byte offset of the failure and the source name.
json parse_json(const std::string& text, const std::string& source = "<input>");

GroupContext parse_group(const json& spec, const std::string& path = "");
Endomorphism parse_endo(const GroupContext& ctx, const json& spec, const std::string& path = "");
std::vector<Endomorphism> parse_endo_list(const GroupContext& ctx, const json& spec, const std::string& path = "");
std::vector<FieldElement> parse_field_elements(const FiniteField& f, const json& spec, const std::string& path = "");

struct FamilyFile {
  GroupContext context;
  LabeledFamily family;
};

FamilyFile parse_family(const json& doc);
json family_to_json(const json& group_spec, const LabeledFamily& family);
json certificate_to_json(const SdfCertificate& cert);
std::string certificate_to_text(const SdfCertificate& cert);

struct DesignFile {
  int v = 0;
  std::optional<int> k;
  std::optional<std::int64_t> lambda;
  std::optional<std::size_t> b;
  std::vector<Block> blocks;
};

/// Accepts the JSON design format or the plain-text format (detected by a leading '{').
DesignFile parse_design(const std::string& contents, const std::string& source = "<input>");
json design_to_json(const Design& d);
/// "v k lambda b" followed by one sorted block per line.
std::string design_to_text(const Design& d);

}  // namespace shortdiff::io
