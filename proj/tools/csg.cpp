#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "csg/correspondence.hpp"
#include "csg/dual.hpp"
#include "csg/groupoid.hpp"
#include "csg/io.hpp"
#include "csg/symplectic.hpp"

namespace {

using namespace csg;

bool is_literal(const std::string& arg) { return !arg.empty() && arg[0] == '['; }

ChordDiagram load_diagram(const std::string& arg, std::optional<DiagramMarking>* m = nullptr) {
  if (is_literal(arg)) {
    if (m) m->reset();
    return parse_diagram(arg);
  }
  return diagram_from_json(read_file(arg), m);
}

DiagramMarking marking_or_standard(const ChordDiagram& c,
                                   const std::optional<DiagramMarking>& m) {
  if (!m) return standard_diagram_marking(c);
  if (static_cast<int>(m->val.size()) != c.k) throw DomainError("marking size mismatch");
  return *m;
}

int cmd_validate(const std::string& input) {
  std::optional<DiagramMarking> m;
  ChordDiagram c = load_diagram(input, &m);
  Realization rz = realize_fatgraph(c);
  auto cycles = boundary_cycles(rz.g);
  if (cycles.size() != 1) {
    std::cout << "not bordered: " << cycles.size() << " boundary cycles\n";
    throw DomainError("diagram is not bordered");
  }
  if (m) {
    Pi1Marking pm = realization_marking(c, rz, *m);
    MarkingReport rep = validate_marking(rz.g, pm);
    if (!rep.ok) {
      std::cout << "marking violates the " << rep.violation << " condition\n";
      throw DomainError("invalid marking");
    }
  }
  std::cout << "genus " << c.k / 2 << "\n";
  return 0;
}

int cmd_enumerate(int genus, bool dual) {
  std::vector<ChordDiagram> all = enumerate_bordered(genus);
  for (const ChordDiagram& c : all) std::cout << format_diagram(dual ? dualize(c) : c) << "\n";
  std::cout << "count " << all.size() << "\n";
  return 0;
}

int cmd_slide(const std::string& input, const std::string& moves_path, bool log) {
  std::optional<DiagramMarking> m0;
  ChordDiagram c = load_diagram(input, &m0);
  DiagramMarking m = marking_or_standard(c, m0);
  std::vector<ChordSlide> slides = parse_slides(read_file(moves_path));
  SlideSequence seq = run_slides(c, m, slides);
  if (log)
    for (size_t i = 0; i < seq.log.size(); ++i)
      std::cout << seq.log[i].diagram_key << "\t" << seq.log[i].slide.mover << "\t"
                << seq.log[i].slide.along << "\n";
  std::cout << format_diagram(seq.end_c) << "\n";
  for (int ch = 0; ch < seq.end_c.k; ++ch)
    std::cout << static_cast<char>('a' + ch) << ": " << format_word(seq.end_m.val[ch]) << "\n";
  return 0;
}

int cmd_relations(int genus, const std::string& kinds_arg) {
  std::vector<RelationKind> kinds;
  {
    std::string cur;
    for (char ch : kinds_arg + ",") {
      if (ch == ',') {
        if (!cur.empty()) kinds.push_back(relation_from_name(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }
  std::vector<ChordDiagram> all = enumerate_bordered(genus);

  unsigned workers = 1;
  if (const char* env = std::getenv("CSG_WORKERS")) {
    int v = std::atoi(env);
    if (v > 1) workers = static_cast<unsigned>(v);
  }
  workers = std::min<unsigned>(workers, std::max<size_t>(all.size(), 1));

  std::vector<std::vector<std::pair<long, long>>> tally(
      all.size(), std::vector<std::pair<long, long>>(kinds.size(), {0, 0}));
  std::atomic<size_t> cursor{0};
  auto work = [&] {
    for (size_t i; (i = cursor.fetch_add(1)) < all.size();) {
      const ChordDiagram& c = all[i];
      DiagramMarking m = standard_diagram_marking(c);
      for (size_t k = 0; k < kinds.size(); ++k) {
        for (const auto& site : relation_sites(c, kinds[k])) {
          SlideSequence seq = instantiate_relation(c, m, kinds[k], site);
          ++tally[i][k].first;
          if (marked_key(seq.end_c, seq.end_m) == marked_key(c, m)) ++tally[i][k].second;
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  bool all_ok = true;
  for (size_t k = 0; k < kinds.size(); ++k) {
    long sites = 0, verified = 0;
    for (size_t i = 0; i < all.size(); ++i) {
      sites += tally[i][k].first;
      verified += tally[i][k].second;
    }
    all_ok = all_ok && sites == verified;
    std::cout << relation_name(kinds[k]) << ": sites " << sites << " verified " << verified
              << "\n";
  }
  if (!all_ok) throw DomainError("some relation loops failed to close");
  return 0;
}

int cmd_cs(const std::string& input, int edge) {
  std::optional<Pi1Marking> m0;
  Fatgraph g = fatgraph_from_json(read_file(input), &m0);
  Pi1Marking m = m0 ? *m0 : standard_marking(g);
  BranchReduction base = branch_reduce(g, m);
  std::vector<ChordSlide> slides = cs_functor(g, m, edge);
  std::cout << "base " << format_diagram(base.c) << "\n";
  std::cout << format_slides(slides);
  std::cout << "count " << slides.size() << "\n";
  return 0;
}

int cmd_trivial(const std::string& input, const std::string& loop_path) {
  std::optional<DiagramMarking> m0;
  ChordDiagram c = load_diagram(input, &m0);
  DiagramMarking m = marking_or_standard(c, m0);
  std::vector<ChordSlide> slides = parse_slides(read_file(loop_path));
  bool closed = verify_loop(c, m, slides);
  bool lift_id = slide_sequence_lift(c, slides).is_identity();
  std::cout << "trivial: " << (closed ? "yes" : "no") << "\n";
  std::cout << "lift identity: " << (lift_id ? "yes" : "no") << "\n";
  if (closed != lift_id)
    throw DomainError("loop closure and Nielsen lift disagree; please report");
  return 0;
}

int cmd_symplectic(const std::string& input, bool by_slides) {
  if (!by_slides) {
    MatZ p = parse_matrix(read_file(input));
    SymplecticReduction red = symplectic_reduce(p);
    int g = static_cast<int>(p.rows()) / 2;
    for (int i = 0; i < g; ++i) {
      std::cout << "A" << i + 1 << ":";
      for (Eigen::Index j = 0; j < red.m.cols(); ++j) std::cout << " " << red.m(2 * i, j);
      std::cout << "\nB" << i + 1 << ":";
      for (Eigen::Index j = 0; j < red.m.cols(); ++j) std::cout << " " << red.m(2 * i + 1, j);
      std::cout << "\n";
    }
    std::cout << "transform\n" << format_matrix(red.u);
    return 0;
  }
  ChordDiagram c = load_diagram(input);
  DualMarked dm{dualize(c), MatZ::Identity(c.k, c.k)};
  SlideReduction red = realize_reduction_by_slides(dm);
  for (size_t s = 0; s < red.stages.size(); ++s) {
    const SlideStage& st = red.stages[s];
    std::cout << "stage " << s + 1 << ": pivot " << static_cast<char>('a' + st.pivot_chord)
              << " partner " << static_cast<char>('a' + st.partner_chord) << " divisor "
              << st.divisor << (st.reoriented ? " (reoriented)" : "") << " slides "
              << st.slides.size() << "\n";
    for (const ChordSlide& sl : st.slides)
      std::cout << "  " << sl.mover << " " << sl.along << "\n";
  }
  std::cout << format_diagram(red.end.c) << "\n";
  std::cout << format_matrix(red.end.h);
  return 0;
}

int cmd_export(const std::string& input, bool dot, bool json_out) {
  if (dot == json_out) throw DomainError("pick exactly one of --dot / --json");
  if (is_literal(input)) {
    ChordDiagram c = parse_diagram(input);
    if (json_out) {
      std::cout << diagram_to_json(c);
    } else {
      std::cout << to_dot(realize_fatgraph(c).g);
    }
    return 0;
  }
  std::string text = read_file(input);
  bool is_diagram = text.find("\"slots\"") != std::string::npos;
  if (is_diagram) {
    std::optional<DiagramMarking> m;
    ChordDiagram c = diagram_from_json(text, &m);
    if (json_out)
      std::cout << diagram_to_json(c, m ? &*m : nullptr);
    else
      std::cout << to_dot(realize_fatgraph(c).g);
  } else {
    std::optional<Pi1Marking> m;
    Fatgraph g = fatgraph_from_json(text, &m);
    if (json_out)
      std::cout << fatgraph_to_json(g, m ? &*m : nullptr);
    else
      std::cout << to_dot(g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chord-diagram calculus for the mapping class group of a bordered surface"};
  app.require_subcommand(1);

  std::string input, aux, kinds = "T,I,C,L,R,O,A,Square";
  int genus = 1, edge = -1;
  bool flag_dual = false, flag_log = false, flag_by_slides = false;
  bool flag_dot = false, flag_json = false;

  CLI::App* validate = app.add_subcommand("validate", "check a diagram (and marking) is bordered");
  validate->add_option("input", input, "diagram literal or JSON file")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "list bordered diagrams of a genus");
  enumerate->add_option("--genus", genus, "surface genus")->required();
  enumerate->add_flag("--dual", flag_dual, "print the dual diagrams");

  CLI::App* slide = app.add_subcommand("slide", "apply a slide file to a marked diagram");
  slide->add_option("input", input, "diagram literal or JSON file")->required();
  slide->add_option("moves", aux, "slide file, one 'mover along' per line")->required();
  slide->add_flag("--log", flag_log, "print the marked key before each slide");

  CLI::App* relations = app.add_subcommand("relations", "audit relation loops at every site");
  relations->add_option("--genus", genus, "surface genus")->required();
  relations->add_option("--kinds", kinds, "comma list from T,I,C,L,R,O,A,Square");

  CLI::App* cs = app.add_subcommand("cs", "slide sequence of a Whitehead move");
  cs->add_option("input", input, "fatgraph JSON file")->required();
  cs->add_option("--edge", edge, "edge id (smaller dart of the pair)")->required();

  CLI::App* trivial = app.add_subcommand("trivial", "decide whether a slide loop is trivial");
  trivial->add_option("input", input, "diagram literal or JSON file")->required();
  trivial->add_option("loop", aux, "slide file")->required();

  CLI::App* symplectic = app.add_subcommand("symplectic", "reduce a pairing to standard form");
  symplectic->add_option("input", input, "pairing matrix file, or a diagram with --by-slides")
      ->required();
  symplectic->add_flag("--by-slides", flag_by_slides, "realize the reduction by chord slides");

  CLI::App* export_cmd = app.add_subcommand("export", "convert a diagram or fatgraph");
  export_cmd->add_option("input", input, "diagram literal, diagram JSON, or fatgraph JSON")
      ->required();
  export_cmd->add_flag("--dot", flag_dot, "Graphviz output");
  export_cmd->add_flag("--json", flag_json, "JSON output");

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(input);
    if (enumerate->parsed()) return cmd_enumerate(genus, flag_dual);
    if (slide->parsed()) return cmd_slide(input, aux, flag_log);
    if (relations->parsed()) return cmd_relations(genus, kinds);
    if (cs->parsed()) return cmd_cs(input, edge);
    if (trivial->parsed()) return cmd_trivial(input, aux);
    if (symplectic->parsed()) return cmd_symplectic(input, flag_by_slides);
    if (export_cmd->parsed()) return cmd_export(input, flag_dot, flag_json);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const csg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const csg::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
