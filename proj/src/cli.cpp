#include "shortdiff/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shortdiff/catalog.hpp"
#include "shortdiff/io.hpp"

namespace shortdiff {

namespace {

struct Options {
  std::string group_path;
  std::string autos_path;
  std::string set_path;
  std::string elements_path;
  std::string input_path;
  std::string out_path;
  std::string method;
  std::string format = "json";
  bool dev = false;
  int max_order = 0;
  int cap = 64;
};

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty())
    out << text;
  else
    io::write_file(opt.out_path, text);
}

json load(const std::string& path) { return io::parse_json(io::read_file(path), path); }

void require(const std::string& value, const char* flag, const std::string& method) {
  if (value.empty())
    throw Error(ErrorKind::InvalidParameter, "arguments", json{{"flag", flag}, {"method", method}},
                std::string("method '") + method + "' requires " + flag);
}

AutomorphismGroup load_closure(const io::GroupContext& ctx, const std::string& path) {
  return closure(ctx.group, io::parse_endo_list(ctx, load(path), ""));
}

int construct(const Options& opt, std::ostream& out) {
  const io::GroupContext ctx = io::parse_group(load(opt.group_path), "");
  const FiniteGroup& g = ctx.group;
  json doc{{"method", opt.method}};
  LabeledFamily family;
  SdfCertificate cert;

  const std::string& m = opt.method;
  if (m == "ferrero" || m == "ferrero-zero" || m == "segments-order6") {
    require(opt.autos_path, "--autos", m);
    const AutomorphismGroup phi = load_closure(ctx, opt.autos_path);
    if (m == "ferrero") {
      auto r = ferrero(g, phi);
      family = std::move(r.family);
      cert = r.certificate;
    } else if (m == "ferrero-zero") {
      auto r = ferrero_with_zero(g, phi);
      doc["case"] = std::string(to_string(r.subgroup_case));
      family = std::move(r.family);
      cert = r.certificate;
    } else {
      auto r = segments_order6(g, phi);
      family = std::move(r.family);
      cert = r.certificate;
    }
  } else if (m == "orbit" || m == "segments") {
    require(opt.set_path, "--set", m);
    const auto s = io::parse_endo_list(ctx, load(opt.set_path), "");
    auto r = m == "orbit" ? orbit_family(g, s) : segments(g, s);
    family = std::move(r.family);
    cert = r.certificate;
  } else if (m == "transnormal") {
    require(opt.set_path, "--set", m);
    require(opt.autos_path, "--autos", m);
    const auto s = io::parse_endo_list(ctx, load(opt.set_path), "");
    auto r = transnormal(g, s, load_closure(ctx, opt.autos_path));
    doc["transitivity"] = json{{"pair_orbit_size", r.pair_orbit_size},
                               {"doubly_transitive", r.doubly_transitive},
                               {"all_automorphisms", r.all_automorphisms}};
    family = std::move(r.family);
    cert = r.certificate;
  } else if (m == "nearfield") {
    require(opt.elements_path, "--elements", m);
    if (!ctx.field)
      throw Error(ErrorKind::InvalidParameter, "arguments", json{{"method", m}}, "nearfield needs a group of kind 'field'");
    const auto t = io::parse_field_elements(*ctx.field, load(opt.elements_path), "");
    auto r = nearfield_family(*ctx.field, t);
    family = std::move(r.family);
    cert = r.certificate;
  } else {
    throw Error(ErrorKind::InvalidParameter, "method", json{{"method", m}}, "unknown method '" + m + "'");
  }

  std::optional<Design> design;
  if (opt.dev) {
    Verdict<Design> d = verify_bibd(g.order(), development(g, family));
    if (!d) throw Error(ErrorKind::TheoremViolation, d.failure().name, d.failure().witness, d.failure().message);
    design = d.value();
  }

  if (opt.format == "text") {
    if (design) {
      emit(opt, out, io::design_to_text(*design));
    } else {
      std::ostringstream ss;
      ss << io::certificate_to_text(cert);
      for (const auto& e : family.entries()) {
        ss << e.label << ':';
        for (Element x : e.block.elements) ss << ' ' << x;
        ss << '\n';
      }
      emit(opt, out, ss.str());
    }
    return kExitOk;
  }
  json fam = io::family_to_json(ctx.spec, family);
  doc["group"] = fam["group"];
  doc["entries"] = fam["entries"];
  doc["certificate"] = io::certificate_to_json(cert);
  if (design) doc["design"] = io::design_to_json(*design);
  emit(opt, out, doc.dump(2) + "\n");
  return kExitOk;
}

int verify_sdf_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
  const io::FamilyFile f = io::parse_family(load(opt.input_path));
  const Verdict<SdfCertificate> v = verify_sdf(f.context.group, f.family);
  if (opt.format == "text") {
    if (v) emit(opt, out, io::certificate_to_text(v.value()));
    else err << "FAIL condition " << v.failure().condition << " (" << v.failure().name << "): " << v.failure().message
             << ' ' << v.failure().witness.dump() << '\n';
  } else {
    if (v) emit(opt, out, json{{"ok", true}, {"certificate", io::certificate_to_json(v.value())}}.dump(2) + "\n");
    else {
      emit(opt, out, json{{"ok", false}, {"failure", v.failure().to_json()}}.dump(2) + "\n");
    }
  }
  return v ? kExitOk : kExitMath;
}

int verify_design_cmd(const Options& opt, std::ostream& out, std::ostream& err) {
  const io::DesignFile f = io::parse_design(io::read_file(opt.input_path), opt.input_path);
  if (f.blocks.empty())
    throw Error(ErrorKind::Parse, "blocks", json{{"source", opt.input_path}}, "design file has no blocks");
  Verdict<Design> v = verify_bibd(f.v, f.blocks);
  if (v) {
    const Design& d = v.value();
    json declared = json::object();
    if (f.k && *f.k != d.k) declared["k"] = {*f.k, d.k};
    if (f.lambda && *f.lambda != d.lambda) declared["lambda"] = {*f.lambda, d.lambda};
    if (f.b && *f.b != d.blocks.size()) declared["b"] = {*f.b, d.blocks.size()};
    if (!declared.empty())
      v = Failure{5, "declared parameters", declared, "declared parameters differ from the verified ones"};
  }
  if (v) {
    const Design& d = v.value();
    if (opt.format == "text")
      emit(opt, out, "design " + std::to_string(d.v) + ' ' + std::to_string(d.k) + ' ' + std::to_string(d.lambda) + ' ' +
                         std::to_string(d.blocks.size()) + '\n');
    else
      emit(opt, out,
           json{{"ok", true}, {"v", d.v}, {"k", d.k}, {"lambda", d.lambda}, {"b", d.blocks.size()}}.dump(2) + "\n");
    return kExitOk;
  }
  if (opt.format == "text")
    err << "FAIL condition " << v.failure().condition << " (" << v.failure().name << "): " << v.failure().message << ' '
        << v.failure().witness.dump() << '\n';
  else {
    emit(opt, out, json{{"ok", false}, {"failure", v.failure().to_json()}}.dump(2) + "\n");
  }
  return kExitMath;
}

int analyze(const Options& opt, std::ostream& out) {
  const io::GroupContext ctx = io::parse_group(load(opt.group_path), "");
  const AutomorphismGroup phi = load_closure(ctx, opt.autos_path);
  const FpfReport fpf = is_fpf(phi);
  const ClassificationReport cls = classification_check(phi);
  json report{{"order", phi.order()},
              {"fpf", fpf.fpf},
              {"cyclic", is_cyclic(phi)},
              {"center_order", cls.center_order},
              {"quotient_order", cls.quotient_order},
              {"quotient_in_{1,12,24,60,120}", cls.quotient_order_admissible}};
  if (fpf.witness) report["fpf_witness"] = json{{"x", *fpf.witness}};
  emit(opt, out, report.dump(2) + "\n");
  return kExitOk;
}

int catalog(const Options& opt, std::ostream& out) {
  emit(opt, out, render_catalog(build_catalog(opt.max_order, opt.cap)));
  return kExitOk;
}

void report(const Error& e, const Options& opt, std::ostream& err) {
  if (opt.format == "json")
    err << e.to_json().dump(2) << '\n';
  else
    err << "error: " << to_string(e.kind()) << ": " << e.condition() << ": " << e.what() << ' ' << e.witness().dump()
        << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Block designs from fixed-point-free automorphism groups"};
  app.require_subcommand(1);
  const std::vector<std::string> methods{"ferrero", "ferrero-zero", "orbit", "segments", "segments-order6", "transnormal",
                                         "nearfield"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", opt.out_path, "Write the result here instead of standard output");
  };

  auto* cons = app.add_subcommand("construct", "Build a family, certify it, optionally develop it");
  cons->add_option("--method", opt.method, "Construction")->required()->check(CLI::IsMember(methods));
  cons->add_option("--group", opt.group_path, "Group spec (JSON)")->required()->check(CLI::ExistingFile);
  cons->add_option("--autos", opt.autos_path, "Generators of Φ or Ψ (JSON endo list)")->check(CLI::ExistingFile);
  cons->add_option("--set", opt.set_path, "The set S (JSON endo list)")->check(CLI::ExistingFile);
  cons->add_option("--elements", opt.elements_path, "Field elements T (JSON coefficient lists)")->check(CLI::ExistingFile);
  cons->add_flag("--dev", opt.dev, "Also emit the development as a verified design");
  add_format(cons);

  auto* vsdf = app.add_subcommand("verify-sdf", "Check a labeled family against the sdf conditions");
  vsdf->add_option("file", opt.input_path, "Family file (JSON)")->required()->check(CLI::ExistingFile);
  add_format(vsdf);

  auto* vdes = app.add_subcommand("verify-design", "Check a block design by exhaustive pair counting");
  vdes->add_option("file", opt.input_path, "Design file (JSON or text)")->required()->check(CLI::ExistingFile);
  add_format(vdes);

  auto* ana = app.add_subcommand("analyze", "Structure of the automorphism group generated by --autos");
  ana->add_option("--group", opt.group_path, "Group spec (JSON)")->required()->check(CLI::ExistingFile);
  ana->add_option("--autos", opt.autos_path, "Generators (JSON endo list)")->required()->check(CLI::ExistingFile);
  add_format(ana);

  auto* cat = app.add_subcommand("catalog", "Parameters of Ferrero designs on Z_n");
  cat->add_option("--max-order", opt.max_order, "Largest n")->required()->check(CLI::PositiveNumber);
  cat->add_option("--cap", opt.cap, "Upper limit accepted for --max-order");
  add_format(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cons->parsed()) return construct(opt, out);
    if (vsdf->parsed()) return verify_sdf_cmd(opt, out, err);
    if (vdes->parsed()) return verify_design_cmd(opt, out, err);
    if (ana->parsed()) return analyze(opt, out);
    if (cat->parsed()) return catalog(opt, out);
  } catch (const Error& e) {
    report(e, opt, err);
    const bool math = e.kind() == ErrorKind::Hypothesis || e.kind() == ErrorKind::TheoremViolation;
    return math ? kExitMath : kExitInput;
  }
  return kExitInput;
}

}  // namespace shortdiff
