// Command-line driver. Every command reads one complex document and writes
// JSON to standard output (or --output). Exit codes: 0 success, 1 usage or
// input error, 2 validation failure, 3 inconclusive search.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fanflip/fanflip.hpp"

using namespace fanflip;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kValidationFailure = 2;
constexpr int kInconclusive = 3;

struct Options {
  std::string file;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::size_t budget = 100000;
  unsigned chains = 1;
  std::size_t steps = 10;
  bool z2 = false;
  bool barycentric = false;
  std::vector<Vertex> stellar;
  std::vector<Vertex> face_a;
  std::vector<Vertex> face_b;
  std::string labels = "file";
  int bound = 0;
  std::string sequence_out;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

ComplexFile load(const Options& o) { return parse_complex_file(read_text(o.file)); }

std::uint64_t require_seed(const Options& o, std::string_view what) {
  if (!o.seed) throw InputError(std::string(what) + " is randomized; pass --seed");
  return *o.seed;
}

ReductionConfig config(const Options& o, std::string_view what) {
  ReductionConfig cfg;
  cfg.budget = o.budget;
  cfg.seed = require_seed(o, what);
  cfg.chains = o.chains;
  return cfg;
}

Json violations_json(const FanViolations& v) {
  Json j;
  j["antipodality"] = Json(v.antipodality);
  Json edges = Json::array();
  for (const auto& e : v.complementary) edges.push_back(Json(e.vertices()));
  j["complementary_edges"] = std::move(edges);
  j["zero_labels"] = Json(v.zero_labels);
  return j;
}

FanLabelling choose_labelling(const Options& o, const ComplexFile& f, const Z2Complex& m) {
  if (o.labels == "file") {
    if (!f.labels) throw InputError("the file has no \"labels\"; use --labels canon or --labels random");
    return *f.labelling();
  }
  if (o.labels == "canon") {
    const int k = m.dimension() + 1;
    if (m.complex() != cross_polytope(k).complex())
      throw InputError("--labels canon needs the cross polytope on vertices ±1..±" + std::to_string(k));
    return canonical_cross_labelling(k);
  }
  const int bound = o.bound > 0 ? o.bound : m.dimension() + 2;
  return random_fan_labelling(m, bound, require_seed(o, "--labels random"));
}

int cmd_info(const Options& o) {
  const auto f = load(o);
  const auto k = f.complex();
  Json j;
  j["dimension"] = k.dimension();
  j["vertices"] = k.num_vertices();
  j["f_vector"] = to_json(k.f_vector());
  j["euler_characteristic"] = k.euler_characteristic();
  j["pure"] = k.is_pure();
  j["closed_pseudomanifold"] = is_closed_pseudomanifold(k);
  j["digest"] = detail::hex64(digest(k));
  int code = kOk;
  if (f.z2) {
    try {
      (void)make_signed(k);
      j["z2"] = "ok";
    } catch (const Error& e) {
      j["z2"] = e.what();
      code = kValidationFailure;
    }
  }
  if (f.labels) {
    const auto v = validate_fan(k, *f.labelling());
    j["labels"] = v.ok() ? Json("ok") : violations_json(v);
    if (!v.ok()) code = kValidationFailure;
  }
  write_text(o.output, dump(j));
  return code;
}

int cmd_moves(const Options& o) {
  const auto f = load(o);
  const bool z2 = f.z2 || o.z2;
  const auto moves = z2 ? enumerate_z2_moves(f.z2_complex()) : enumerate_moves(f.complex());
  Json j;
  j["kind"] = z2 ? "z2" : "plain";
  j["count"] = moves.size();
  Json list = Json::array();
  for (const auto& m : moves) list.push_back(to_json(m, z2 ? SequenceKind::z2 : SequenceKind::plain));
  j["moves"] = std::move(list);
  write_text(o.output, dump(j));
  return kOk;
}

int cmd_flip(const Options& o) {
  const auto f = load(o);
  const BistellarMove mv{Simplex(o.face_a), Simplex(o.face_b)};
  if (!f.z2) {
    write_text(o.output, serialize(to_file(apply_move(f.complex(), mv).complex)));
    return kOk;
  }
  const auto m = f.z2_complex();
  if (f.labels) {
    const auto r = relabel_move(m, *f.labelling(), mv);
    write_text(o.output, serialize(to_file(r.complex, integerize(r.labelling))));
  } else {
    write_text(o.output, serialize(to_file(apply_z2_move(m, mv).complex)));
  }
  return kOk;
}

int cmd_walk(const Options& o) {
  const auto f = load(o);
  const auto walk = random_z2_walk(f.z2_complex(), o.steps, require_seed(o, "walk"));
  write_text(o.output, serialize(to_file(walk.complex)));
  if (!o.sequence_out.empty()) write_text(o.sequence_out, dump(to_json(walk.sequence)));
  return kOk;
}

int cmd_subdivide(const Options& o) {
  if (o.barycentric == !o.stellar.empty()) throw InputError("subdivide needs exactly one of --barycentric, --stellar");
  const auto f = load(o);
  if (o.barycentric) {
    if (f.z2)
      write_text(o.output, serialize(to_file(equivariant_sd(f.z2_complex()).complex)));
    else
      write_text(o.output, serialize(to_file(barycentric_subdivide(f.complex()).complex)));
    return kOk;
  }
  const auto k = f.complex();
  write_text(o.output, serialize(to_file(stellar_subdivide(k, Simplex(o.stellar), k.max_abs_vertex() + 1))));
  return kOk;
}

int cmd_quotient(const Options& o) {
  const auto f = load(o);
  if (!f.z2) throw InputError("quotient needs a document with \"z2\": true");
  const auto q = quotient(equivariant_sd(f.z2_complex()).complex);
  write_text(o.output, serialize(to_file(q.complex)));
  return kOk;
}

int cmd_fan_check(const Options& o) {
  const auto f = load(o);
  const auto m = f.z2_complex();
  const auto lambda = choose_labelling(o, f, m);
  const auto v = validate_fan(m, lambda);
  Json j;
  j["valid"] = v.ok();
  if (!v.ok()) j["violations"] = violations_json(v);
  const auto a = alpha_counts(m, lambda);
  j["alpha_plus"] = a.plus;
  j["alpha_minus"] = a.minus;
  write_text(o.output, dump(j));
  return v.ok() ? kOk : kValidationFailure;
}

int cmd_tucker(const Options& o) {
  const auto f = load(o);
  const auto m = f.z2_complex();
  const auto lambda = choose_labelling(o, f, m);
  Json j;
  try {
    const auto e = tucker_witness(m, lambda);
    j["edge"] = Json(e.vertices());
    j["labels"] = Json::array({lambda.to_integers().at(e[0]), lambda.to_integers().at(e[1])});
  } catch (const Error& e) {
    j["error"] = std::string(to_string(e.code()));
    j["message"] = e.what();
    write_text(o.output, dump(j));
    return kValidationFailure;
  }
  write_text(o.output, dump(j));
  return kOk;
}

int cmd_reduce(const Options& o) {
  const auto f = load(o);
  const auto cfg = config(o, "reduce");
  const bool z2 = f.z2 || o.z2;
  const auto r = z2 ? z2_reduce_to_cross_polytope(f.z2_complex(), cfg) : reduce_to_boundary_simplex(f.complex(), cfg);
  write_text(o.output, dump(to_json(r)));
  return r.outcome == Outcome::reduced ? kOk : kInconclusive;
}

int cmd_certify(const Options& o) {
  const auto f = load(o);
  const auto m = f.z2_complex();
  const auto lambda = choose_labelling(o, f, m);
  const auto v = validate_fan(m, lambda);
  if (!v.ok()) {
    Json j;
    j["valid"] = false;
    j["violations"] = violations_json(v);
    write_text(o.output, dump(j));
    return kValidationFailure;
  }
  try {
    const auto cert = fan_certificate(m, lambda, config(o, "certify"));
    write_text(o.output, dump(to_json(cert)));
    return cert.verified() ? kOk : kValidationFailure;
  } catch (const CertificateUnavailable& e) {
    Json j;
    j["verified"] = false;
    j["alpha_plus"] = e.alpha_plus();
    j["message"] = e.what();
    write_text(o.output, dump(j));
    return kInconclusive;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bistellar flips, Z2-complexes and Fan labellings"};
  app.require_subcommand(1);
  Options o;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Complex document (JSON)")->required();
    sub->add_option("-o,--output", o.output, "Write the result here instead of standard output");
    return sub;
  };
  auto with_search = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Flips to try")->default_val(100000);
    sub->add_option("--seed", o.seed, "Random seed (required)");
    sub->add_option("--chains", o.chains, "Independent search chains")->default_val(1);
  };
  auto with_labels = [&](CLI::App* sub) {
    sub->add_option("--labels", o.labels, "Labelling source")
        ->check(CLI::IsMember({"file", "canon", "random"}))
        ->default_val("file");
    sub->add_option("--bound", o.bound, "Label bound m for --labels random (default dimension + 2)");
  };

  std::map<CLI::App*, std::function<int(const Options&)>> handlers;
  auto add = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
    auto* sub = with_file(app.add_subcommand(name, help));
    handlers[sub] = std::move(fn);
    return sub;
  };

  add("info", "f-vector, Euler characteristic and validators", cmd_info);
  add("moves", "Enumerate admissible moves", cmd_moves)->add_flag("--z2", o.z2, "Z2-moves");
  auto* flip = add("flip", "Apply one move (Z2-move for z2 documents; labels follow)", cmd_flip);
  flip->add_option("--A", o.face_a, "Face A to remove")->required()->delimiter(',');
  flip->add_option("--B", o.face_b, "Face B to insert")->required()->delimiter(',');
  auto* walk = add("walk", "Random Z2-walk", cmd_walk);
  walk->add_option("--steps", o.steps, "Number of Z2-moves")->default_val(10);
  walk->add_option("--seed", o.seed, "Random seed (required)");
  walk->add_option("--sequence", o.sequence_out, "Also write the flip sequence here");
  auto* subdivide = add("subdivide", "Barycentric or stellar subdivision", cmd_subdivide);
  subdivide->add_flag("--barycentric", o.barycentric, "Barycentric (equivariant for z2 documents)");
  subdivide->add_option("--stellar", o.stellar, "Stellar subdivision at this face")->delimiter(',');
  add("quotient", "Antipodal quotient of the barycentric subdivision", cmd_quotient);
  with_labels(add("fan-check", "Validate a Fan labelling and count alternating facets", cmd_fan_check));
  auto* tucker = add("tucker", "Find a complementary edge", cmd_tucker);
  with_labels(tucker);
  tucker->add_option("--seed", o.seed, "Random seed for --labels random");
  auto* reduce = add("reduce", "Search for a flip sequence to the canonical sphere", cmd_reduce);
  reduce->add_flag("--z2", o.z2, "Use Z2-moves and target the cross polytope");
  with_search(reduce);
  auto* certify = add("certify", "Fan certificate: reduction plus relabelling trace", cmd_certify);
  with_labels(certify);
  with_search(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  for (auto& [sub, fn] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return fn(o);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidVertexId:
        case ErrorCode::EmptyComplex:
        case ErrorCode::InvalidDimension:
          return kInputError;
        default:
          return kValidationFailure;
      }
    }
  }
  return kInputError;
}
