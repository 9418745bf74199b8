// Copyright 2026 The gpt-gtt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpt/cli.hpp"

#include <filesystem>
#include <iostream>
#include <variant>

#include "CLI11.hpp"

#include "gpt/acceptance.hpp"
#include "gpt/frame.hpp"
#include "gpt/gallery.hpp"
#include "gpt/io.hpp"
#include "gpt/plot.hpp"

namespace gpt::cli {
namespace {

struct Options {
    std::string system;
    std::string input;
    std::string output;
    std::string second;  // samples or pipeline file
    std::string p;
    std::string slice = "1/2";
    std::string family;
    std::size_t n = 0;
    bool float_view = false;
    bool do_export = false;
    std::vector<std::string> names;
    std::uint64_t seed = 2026;
};

struct Loaded {
    std::variant<GptSystem, SmoothFamily> value;
    std::vector<Observable> observables;
};

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::IoError:
        case ErrorCode::UnknownName:
        case ErrorCode::EmptyInput:
        case ErrorCode::DimensionMismatch: return 3;
        default: return 2;
    }
}

std::optional<Rational> noise(const Options &o) {
    if (o.p.empty()) return std::nullopt;
    return parse_rational(o.p);
}

Loaded load_system(const Options &o) {
    std::string source = !o.input.empty() ? o.input : !o.family.empty() ? o.family : o.system;
    if (source.empty()) throw Error(ErrorCode::IoError, "no system given; pass a file, a gallery name or --family");
    Loaded out{SmoothFamily::rebit(), {}};
    if (o.family.empty() && std::filesystem::exists(source)) {
        Json j = read_json_file(source);
        if (auto f = family_from_json(j)) {
            out.value = *f;
        } else {
            RawSystem raw = raw_system_from_json(j);
            out.observables = raw.observables;
            out.value = build_system(raw);
        }
    } else {
        GalleryEntry e = load(source, noise(o));
        out.value = e.system;
    }
    if (o.n && std::holds_alternative<SmoothFamily>(out.value)) {
        out.value = discretize(std::get<SmoothFamily>(out.value), o.n).system;
    }
    return out;
}

// Verbs that need a polytope discretize smooth families at n = 64 by default.
GptSystem polytopic(const Loaded &l, std::ostream &err) {
    if (const auto *s = std::get_if<GptSystem>(&l.value)) return *s;
    const auto &f = std::get<SmoothFamily>(l.value);
    err << "note: " << f.name() << " is not a polytope; using its 64-gon approximant (set --n to change)\n";
    return discretize(f, 64).system;
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
    }
}

int validate(const Options &o, std::ostream &out) {
    std::string source = !o.input.empty() ? o.input : o.system;
    if (o.family.empty() && std::filesystem::exists(source)) {
        Json j = read_json_file(source);
        if (!family_from_json(j)) {
            RawSystem raw = raw_system_from_json(j);
            ValidationReport r = check_raw(raw);
            if (!r.ok()) {
                out << "invalid: " << (raw.name.empty() ? source : raw.name) << "\n";
                for (const auto &v : r.violations) out << "  " << to_string(v.axiom) << ": " << v.detail << "\n";
                return 2;
            }
        }
    }
    Loaded l = load_system(o);
    if (const auto *s = std::get_if<GptSystem>(&l.value)) {
        out << "valid: " << (s->name().empty() ? source : s->name()) << " (dimension " << s->ambient_dim() << ", "
            << s->states().vertices().size() << " extremal states, " << s->effects().vertices().size()
            << " extremal effects)\n";
    } else {
        out << "valid: " << std::get<SmoothFamily>(l.value).name() << " (smooth family)\n";
    }
    return 0;
}

int classify_verb(const Options &o, std::ostream &out) {
    Loaded l = load_system(o);
    if (const auto *s = std::get_if<GptSystem>(&l.value)) {
        Classification c = classify(*s);
        bool gtt = admits_gtt(*s);
        out << to_string(c.tag) << "; admits GTT: " << (gtt ? "yes" : "no");
        if (c.witness) out << "; witness: " << c.witness->str();
        out << "\n";
        return 0;
    }
    SmoothClassification c = smooth_classify(std::get<SmoothFamily>(l.value));
    out << to_string(c.classification.tag) << "; admits GTT: " << (admits_gtt(c.classification.tag) ? "yes" : "no");
    if (c.classification.witness) out << "; witness: " << c.classification.witness->str();
    out << "\n";
    for (const auto &line : c.certificate) out << "  checked: " << line << "\n";
    return 0;
}

int emap(const Options &o, std::ostream &out, std::ostream &err) {
    GptSystem s = polytopic(load_system(o), err);
    emit(o, polyhedron_to_json(unrestricted_effects(s.states()), o.float_view).dump(2) + "\n", out);
    return 0;
}

int wmap(const Options &o, std::ostream &out, std::ostream &err) {
    GptSystem s = polytopic(load_system(o), err);
    emit(o, polyhedron_to_json(states_from_effects(s.effects()), o.float_view).dump(2) + "\n", out);
    return 0;
}

int recover(const Options &o, std::ostream &out, std::ostream &err) {
    GptSystem s = polytopic(load_system(o), err);
    if (o.second.empty()) throw Error(ErrorCode::IoError, "no samples file given");
    FrameSamples v = samples_from_json(read_json_file(o.second));
    try {
        QVec w = recover_state(v, s);
        out << "state: " << w.str() << "\n";
        out << "in S: " << (s.states().body().contains(w) ? "yes" : "no") << "\n";
        return 0;
    } catch (const Error &e) {
        out << "error: " << to_string(e.code()) << "\n";
        err << e.what() << "\n";
        return 2;
    }
}

int simulate(const Options &o, std::ostream &out, std::ostream &err) {
    Loaded l = load_system(o);
    GptSystem s = polytopic(l, err);
    if (o.second.empty()) throw Error(ErrorCode::IoError, "no pipeline file given");
    Pipeline p = pipeline_from_json(read_json_file(o.second));
    Observable result = run_pipeline(p, l.observables);
    Json j = observable_to_json(result);
    j["observable"] = is_observable(result, s);
    emit(o, j.dump(2) + "\n", out);
    return 0;
}

int plot(const Options &o, std::ostream &out, std::ostream &err) {
    GptSystem s = polytopic(load_system(o), err);
    PlotOptions po;
    po.slice = parse_rational(o.slice);
    po.float_view = o.float_view;
    emit(o, render_svg(s, po), out);
    return 0;
}

int gallery_verb(const Options &o, std::ostream &out) {
    if (o.do_export) {
        if (o.names.size() != 1) throw Error(ErrorCode::UnknownName, "--export takes exactly one gallery name");
        emit(o, entry_to_json(load(o.names.front(), noise(o))).dump(2) + "\n", out);
        return 0;
    }
    for (const auto &n : o.names) load(n);
    GalleryReport r = run_all(o.names.empty() ? std::nullopt : std::optional(o.names));
    for (const auto &e : r.entries) {
        out << (e.passed() ? "PASS " : "FAIL ") << e.name << " " << to_string(e.computed);
        for (const auto &f : e.failures) out << " [" << f << "]";
        out << "\n";
    }
    out << r.entries.size() - r.failures() << "/" << r.entries.size() << " entries pass\n";
    return r.failures() ? 1 : 0;
}

int suite(const Options &o, std::ostream &out) {
    GalleryReport g = run_all();
    for (const auto &e : g.entries) out << (e.passed() ? "PASS " : "FAIL ") << "gallery " << e.name << "\n";
    std::size_t failed = g.failures();
    for (int id = 1; id <= kCriteria; ++id) {
        CriterionResult r = run_criterion(id, o.seed);
        out << format(r) << std::endl;
        failed += !r.passed;
    }
    out << (failed ? "suite failed: " + std::to_string(failed) + " failures" : std::string("suite passed")) << "\n";
    return failed ? 1 : 0;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact convex geometry for general probabilistic theories", "gpt-gtt"};
    app.require_subcommand(1, 1);
    Options o;

    auto system_flags = [&](CLI::App *sub) {
        sub->add_option("system", o.system, "System JSON file or gallery name");
        sub->add_option("--input", o.input, "System JSON file");
        sub->add_option("--family", o.family, "Gallery or smooth family name");
        sub->add_option("--p", o.p, "Noise parameter p/q");
        sub->add_option("--n", o.n, "Discretize smooth families with n vertices");
    };
    auto output_flags = [&](CLI::App *sub) {
        sub->add_option("--output", o.output, "Write the result to this file");
        sub->add_flag("--float-view", o.float_view, "Add decimal annotations");
    };

    auto *v = app.add_subcommand("validate", "Check the state and effect axioms");
    system_flags(v);
    auto *c = app.add_subcommand("classify", "Classify and decide whether a GTT holds");
    system_flags(c);
    auto *e = app.add_subcommand("emap", "Unrestricted effect space E(S) as JSON");
    system_flags(e);
    output_flags(e);
    auto *w = app.add_subcommand("wmap", "Unrestricted state space W(E) as JSON");
    system_flags(w);
    output_flags(w);
    auto *r = app.add_subcommand("recover", "Recover the state behind frame-function samples");
    system_flags(r);
    r->add_option("samples,--samples", o.second, "Samples JSON file");
    auto *s = app.add_subcommand("simulate", "Run an observable pipeline");
    system_flags(s);
    s->add_option("pipeline,--pipeline", o.second, "Pipeline JSON file");
    output_flags(s);
    auto *p = app.add_subcommand("plot", "Render states and effects as SVG");
    system_flags(p);
    output_flags(p);
    p->add_option("--slice", o.slice, "Last effect coordinate for 3D and 4D cuts");
    auto *g = app.add_subcommand("gallery", "Check gallery entries or export one");
    g->add_option("names", o.names, "Entries to check (default all)");
    g->add_flag("--export", o.do_export, "Print the named entry as JSON");
    g->add_option("--p", o.p, "Noise parameter p/q");
    g->add_option("--output", o.output, "Write the export to this file");
    auto *t = app.add_subcommand("suite", "Run the gallery and the acceptance criteria");
    t->add_option("--seed", o.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        int code = app.exit(ex, out, err);
        return code == 0 ? 0 : 3;
    }

    try {
        if (v->parsed()) return validate(o, out);
        if (c->parsed()) return classify_verb(o, out);
        if (e->parsed()) return emap(o, out, err);
        if (w->parsed()) return wmap(o, out, err);
        if (r->parsed()) return recover(o, out, err);
        if (s->parsed()) return simulate(o, out, err);
        if (p->parsed()) return plot(o, out, err);
        if (g->parsed()) return gallery_verb(o, out);
        if (t->parsed()) return suite(o, out);
    } catch (const ValidationError &ex) {
        out << "invalid\n";
        for (const auto &viol : ex.report().violations) out << "  " << to_string(viol.axiom) << ": " << viol.detail << "\n";
        return 2;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << "\n";
        return exit_code(ex.code());
    } catch (const nlohmann::json::exception &ex) {
        err << "error: malformed input: " << ex.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace gpt::cli
