// ivbs: answer marginal queries on a knowledge-base file.
//
//   ivbs query --kb FILE [--target VAR] [--rep lower|upper] [--order H] [--trace] [--emit basic|explicit]
//   ivbs format --kb FILE
//
// Exit status: 0 ok, 1 contradiction, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ivbs/errors.hpp"
#include "ivbs/kb.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Applies one `--order` value: mindegree, minfill or given:<v>,<v>,...
void apply_order(const std::string& text, const ivbs::KnowledgeBase& kb, ivbs::QueryOptions& o) {
  if (text.rfind("given:", 0) == 0) {
    o.heuristic = ivbs::Heuristic::given;
    o.given.clear();
    std::stringstream ss(text.substr(6));
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto v = kb.symbols.find(name);
      if (!v) throw ivbs::InputError("unknown variable '" + name + "' in --order");
      o.given.push_back(*v);
    }
    return;
  }
  o.heuristic = ivbs::parse_heuristic(text);
  if (o.heuristic == ivbs::Heuristic::given) throw ivbs::InputError("--order given needs a list: given:<v>,<v>,...");
}

int answer(const ivbs::KnowledgeBase& kb, ivbs::QueryOptions o, bool trace) {
  const auto r = ivbs::run_query(kb, o);
  if (trace)
    for (const auto& s : r.trace) std::cerr << ivbs::format_trace_step(s, kb.symbols) << '\n';
  std::cout << ivbs::serialize_result(r, kb);
  return r.status == ivbs::Status::contradiction ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local computation with valuation-based systems"};
  app.require_subcommand(1);

  std::string kb_path, target, rep, order, emit = "basic";
  bool trace = false;

  auto* query = app.add_subcommand("query", "marginal of the knowledge base on one variable");
  query->add_option("--kb", kb_path, "knowledge-base file")->required();
  query->add_option("--target", target, "query variable; omit to run the file's query lines");
  query->add_option("--rep", rep, "lower or upper")->check(CLI::IsMember({"lower", "upper"}));
  query->add_option("--order", order, "mindegree, minfill or given:<v>,<v>,...");
  query->add_flag("--trace", trace, "print deletion steps to stderr");
  query->add_option("--emit", emit, "basic or explicit")->check(CLI::IsMember({"basic", "explicit"}));

  auto* format = app.add_subcommand("format", "print the knowledge base in canonical form");
  format->add_option("--kb", kb_path, "knowledge-base file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto kb = ivbs::parse_kb(slurp(kb_path));
    if (format->parsed()) {
      std::cout << ivbs::serialize_kb(kb);
      return 0;
    }

    auto configure = [&](ivbs::QueryOptions o) {
      if (!rep.empty()) o.rep = rep == "upper" ? ivbs::RepKind::upper : ivbs::RepKind::lower;
      if (!order.empty()) apply_order(order, kb, o);
      o.emit_explicit = emit == "explicit";
      return o;
    };

    if (!target.empty()) {
      auto v = kb.symbols.find(target);
      if (!v) throw ivbs::InputError("unknown query variable '" + target + "'");
      ivbs::QueryOptions o;
      o.target = *v;
      return answer(kb, configure(o), trace);
    }
    if (kb.queries.empty()) throw ivbs::InputError("no --target given and the file has no query lines");
    int status = 0;
    for (const auto& q : kb.queries) {
      std::cout << "# query " << kb.symbols.name(q.target) << '\n';
      status = std::max(status, answer(kb, configure(ivbs::options_from(q)), trace));
    }
    return status;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
