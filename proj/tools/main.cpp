// Command-line front end: enumerate observed languages, test membership,
// replay traces and lint observers over grammar or sticker system files.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obslang/errors.hpp"
#include "obslang/go_system.hpp"
#include "obslang/render.hpp"
#include "obslang/sticker.hpp"
#include "obslang/system_file.hpp"

namespace {

using namespace obslang;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

OutputWord parse_output_word(const MonadicTransducer& t, const std::string& text) {
    Word ids = parse_word(t.output_alphabet(), text);
    OutputWord out;
    out.reserve(ids.size());
    for (SymbolId id : ids)
        out.push_back(OutputSymbol::letter(id).raw());
    return out;
}

std::vector<RuleApplication> parse_grammar_replay(const std::string& script) {
    std::vector<RuleApplication> apps;
    std::istringstream in(script);
    std::string tok;
    while (in >> tok) {
        std::size_t at = tok.find('@');
        if (at == std::string::npos || at == 0 || at + 1 == tok.size())
            throw Error("replay token \"" + tok + "\" must have the form RULE@POS");
        try {
            apps.push_back(RuleApplication{static_cast<std::uint32_t>(std::stoul(tok.substr(0, at))),
                                           static_cast<std::uint32_t>(std::stoul(tok.substr(at + 1)))});
        } catch (const std::exception&) {
            throw Error("replay token \"" + tok + "\" must have the form RULE@POS");
        }
    }
    return apps;
}

std::vector<std::uint32_t> parse_sticker_replay(const ObservableStickerSystem& phi,
                                                const std::string& script) {
    std::vector<std::uint32_t> indices;
    std::istringstream in(script);
    std::string tok;
    while (in >> tok) {
        std::optional<std::uint32_t> found;
        for (std::uint32_t d = 0; d < phi.system.dominoes.size(); ++d) {
            if (render_domino(phi.system.alphabet, phi.system.dominoes[d]) == tok) {
                found = d;
                break;
            }
        }
        if (!found)
            throw Error("\"" + tok + "\" is not a declared domino");
        indices.push_back(*found);
    }
    return indices;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

struct Options {
    std::string system_path;
    std::size_t max_steps = 0;
    std::optional<std::size_t> max_form_len;
    std::optional<std::size_t> max_output_len;
    bool filter_bottom = false;
    std::string mode;
    std::string word;
    std::string replay;
    std::string axiom;
    int jobs = 1;
};

Mode resolve_mode(const Options& opt) {
    if (!opt.mode.empty() && opt.mode != "free" && opt.mode != "filtered")
        throw Error("--mode must be free or filtered");
    if (opt.filter_bottom && opt.mode == "free")
        throw Error("--filter-bottom conflicts with --mode free");
    if (opt.filter_bottom || opt.mode == "filtered")
        return Mode::bottom_filtered;
    return Mode::free;
}

EnumerationBounds grammar_bounds(const Options& opt) {
    return EnumerationBounds{opt.max_steps, opt.max_form_len, opt.max_output_len};
}

ComputationBounds sticker_bounds(const Options& opt) {
    if (opt.max_form_len || opt.max_output_len)
        throw Error("--max-form-len/--max-output-len apply to grammar systems only");
    return ComputationBounds{opt.max_steps};
}

std::string join_forms(const std::vector<std::string>& forms, bool compact) {
    std::string out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i > 0)
            out += compact ? "=>" : " => ";
        out += forms[i];
    }
    return out;
}

int run_enumerate(const LoadedSystem& sys, const Options& opt) {
    Mode mode = resolve_mode(opt);
    ObservedLanguage lang;
    if (sys.is_sticker())
        lang = enumerate_observed(sys.sticker(), sticker_bounds(opt), mode, opt.jobs);
    else
        lang = enumerate(sys.go(), grammar_bounds(opt), mode, opt.jobs);

    const MonadicTransducer& obs = sys.observer();
    for (const OutputWord& w : lang.words)
        std::cout << obs.render_output(w) << "\n";
    std::cerr << "words: " << lang.words.size()
              << "  exhausted: " << (lang.exhausted ? "yes" : "no")
              << "  explored: " << lang.stats.forms_explored;
    if (!sys.is_sticker())
        std::cerr << "  max-nonterminals: " << lang.stats.max_nonterminals_seen;
    std::cerr << "\n";
    return 0;
}

int run_member(const LoadedSystem& sys, const Options& opt) {
    const MonadicTransducer& obs = sys.observer();
    OutputWord word = parse_output_word(obs, opt.word);

    if (!sys.is_sticker()) {
        const GOSystem& go = sys.go();
        auto witness = member(go, word, grammar_bounds(opt));
        if (!witness) {
            std::cerr << "not found within bounds\n";
            return 1;
        }
        std::vector<std::string> forms;
        std::string replay;
        for (const TraceRow& row : trace(go, witness->applications)) {
            forms.push_back(render_word(go.grammar.alphabet(), row.form));
            if (row.applied)
                replay += (replay.empty() ? "" : " ") + render_replay_token(*row.applied);
        }
        std::cout << "witness: " << join_forms(forms, go.grammar.alphabet().compact()) << "\n";
        std::cout << "replay: " << replay << "\n";
        return 0;
    }

    const ObservableStickerSystem& phi = sys.sticker();
    auto witness = member(phi, word, sticker_bounds(opt));
    if (!witness) {
        std::cerr << "not found within bounds\n";
        return 1;
    }
    std::vector<std::string> forms;
    std::string replay;
    for (const StickerTraceRow& row : trace(phi, witness->axiom, witness->dominoes)) {
        forms.push_back(render_molecule(phi.system.alphabet, row.molecule));
        if (row.domino)
            replay += (replay.empty() ? "" : " ") +
                      render_domino(phi.system.alphabet, phi.system.dominoes[*row.domino]);
    }
    std::cout << "witness: " << join_forms(forms, true) << "\n";
    std::cout << "axiom: "
              << render_molecule(phi.system.alphabet, phi.system.axioms[witness->axiom]) << "\n";
    std::cout << "replay: " << replay << "\n";
    return 0;
}

int run_trace(const LoadedSystem& sys, const Options& opt) {
    std::vector<std::vector<std::string>> table;
    std::string output_line;

    if (!sys.is_sticker()) {
        const GOSystem& go = sys.go();
        auto apps = parse_grammar_replay(opt.replay);
        auto rows = trace(go, apps);
        table.push_back({"step", "applied", "form", "output"});
        OutputWord out;
        for (const TraceRow& row : rows) {
            table.push_back({std::to_string(row.step),
                             row.applied ? render_rule_application(go.grammar, *row.applied) : "-",
                             render_word(go.grammar.alphabet(), row.form),
                             go.observer.render_output_symbol(row.emitted)});
            if (!row.emitted.is_lambda())
                out.push_back(row.emitted.raw());
        }
        output_line = go.observer.render_output(out);
    } else {
        const ObservableStickerSystem& phi = sys.sticker();
        std::size_t axiom = 0;
        if (!opt.axiom.empty()) {
            bool found = false;
            for (std::size_t i = 0; i < phi.system.axioms.size(); ++i) {
                if (render_molecule(phi.system.alphabet, phi.system.axioms[i]) == opt.axiom) {
                    axiom = i;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error("\"" + opt.axiom + "\" is not a declared axiom");
        } else if (phi.system.axioms.size() > 1) {
            throw Error("the system has several axioms; pick one with --axiom UPPER/LOWER");
        }
        auto dominoes = parse_sticker_replay(phi, opt.replay);
        auto rows = trace(phi, axiom, dominoes);
        table.push_back({"step", "added", "molecule", "output"});
        OutputWord out;
        for (const StickerTraceRow& row : rows) {
            table.push_back({std::to_string(row.step),
                             row.domino ? render_domino(phi.system.alphabet,
                                                        phi.system.dominoes[*row.domino])
                                        : "-",
                             render_molecule(phi.system.alphabet, row.molecule),
                             phi.observer.render_output_symbol(row.emitted)});
            if (!row.emitted.is_lambda())
                out.push_back(row.emitted.raw());
        }
        output_line = phi.observer.render_output(out);
    }

    print_table(table);
    std::cout << "output: " << output_line << "\n";
    return 0;
}

int run_lint(const LoadedSystem& sys, const ObserverSpec& spec) {
    const Alphabet& input = sys.is_sticker() ? sys.sticker().vd.alphabet()
                                             : sys.go().grammar.alphabet();
    for (const OverlapWarning& w : lint_disjointness(spec, input)) {
        std::cout << "warning: cases " << (w.case_a + 1) << " and " << (w.case_b + 1)
                  << " overlap, e.g. on " << render_word(input, w.witness) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"observed-language tools for grammar and sticker systems"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* cmd, bool with_bounds) {
        cmd->add_option("--system", opt.system_path, "system file")->required();
        if (with_bounds) {
            cmd->add_option("--max-steps", opt.max_steps, "maximum number of steps")->required();
            cmd->add_option("--max-form-len", opt.max_form_len, "form length bound");
            cmd->add_option("--max-output-len", opt.max_output_len, "output length bound");
        }
    };

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list the bounded observed language");
    add_common(enumerate_cmd, true);
    enumerate_cmd->add_flag("--filter-bottom", opt.filter_bottom, "drop words containing bottom");
    enumerate_cmd->add_option("--mode", opt.mode, "free|filtered");
    enumerate_cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* member_cmd = app.add_subcommand("member", "search for a derivation observing a word");
    add_common(member_cmd, true);
    member_cmd->add_option("--word", opt.word, "word over the output alphabet")->required();

    CLI::App* trace_cmd = app.add_subcommand("trace", "replay a script and print the step table");
    add_common(trace_cmd, false);
    trace_cmd->add_option("--replay", opt.replay, "replay script")->required();
    trace_cmd->add_option("--axiom", opt.axiom, "axiom to start from (sticker systems)");

    CLI::App* lint_cmd = app.add_subcommand("lint", "report overlapping observer cases");
    add_common(lint_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        LoadedSystem sys = parse_system(read_file(opt.system_path));
        if (enumerate_cmd->parsed())
            return run_enumerate(sys, opt);
        if (member_cmd->parsed())
            return run_member(sys, opt);
        if (trace_cmd->parsed())
            return run_trace(sys, opt);
        return run_lint(sys, sys.observer_spec);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
