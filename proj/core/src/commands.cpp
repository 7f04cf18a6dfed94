#include "colorhom/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "colorhom/constructions.hpp"
#include "colorhom/document.hpp"
#include "colorhom/error.hpp"
#include "colorhom/fixtures.hpp"
#include "colorhom/suite.hpp"

namespace colorhom {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw InputError("cannot write " + path.string());
    }
    f << text;
    if (!f.flush()) {
        throw InputError("cannot write " + path.string());
    }
}

template <class B>
BundleDocument output_doc(Certified<B> c, std::string description, std::map<std::string, EvenMap> extra = {})
{
    return BundleDocument{std::move(c.bundle), std::move(extra), std::move(description), std::move(c.report)};
}

int finish(const BundleDocument& doc, const std::filesystem::path& output, std::ostream& out)
{
    write_file(output, serialize_document(doc));
    const bool ok = doc.report && doc.report->passed();
    out << "wrote " << output.string() << " (" << to_string(kind_of(doc.bundle)) << ", "
        << (doc.report ? doc.report->identity : std::string("unchecked")) << ": " << (ok ? "pass" : "FAIL") << ")\n";
    if (!ok && doc.report) {
        out << describe(*doc.report);
    }
    return ok ? kExitPass : kExitViolations;
}

template <class B>
const B& require(const BundleDocument& doc, BundleKind kind, std::string_view command)
{
    if (const auto* b = std::get_if<B>(&doc.bundle)) {
        return *b;
    }
    throw InputError(std::string(command) + " needs a " + std::string(to_string(kind)) + " bundle, got " +
                     std::string(to_string(kind_of(doc.bundle))));
}

template <class F>
int guarded(std::ostream& out, std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        out << report_to_json(e.report(), true) << "\n";
        return kExitViolations;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace

unsigned default_jobs()
{
    const char* env = std::getenv("COLORHOM_JOBS");
    if (env == nullptr) {
        return 1;
    }
    const std::string_view s(env);
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
        return 1;
    }
    return v;
}

int cmd_check(const CheckCommand& c, std::ostream& out, std::ostream& err)
{
    return guarded(out, err, [&] {
        const std::string text = read_document_text(c.input);
        const BundleDocument doc = parse_document(text);
        const std::string digest = document_digest(text);
        const SuiteResult result = run_suite(doc, c.identity, c.options);
        out << (c.format == ReportFormat::Machine ? machine_report(result, digest) : text_report(result, doc, digest));
        return result.passed() ? kExitPass : kExitViolations;
    });
}

int cmd_construct(const ConstructCommand& c, std::ostream& out, std::ostream& err)
{
    return guarded(out, err, [&] {
        if (c.what != "akivis" && c.what != "dialg2leibniz" && c.what != "trivext" && c.what != "tensor2") {
            throw InputError("unknown construction \"" + c.what + "\" (expected akivis, dialg2leibniz, trivext or tensor2)");
        }
        if (c.what == "tensor2" && !c.experimental) {
            throw InputError("tensor2 is experimental; pass --experimental");
        }
        const BundleDocument in = load_document(c.input);
        const std::string src = c.input.filename().string();
        if (c.what == "akivis") {
            const auto& b = require<NonAssocBundle>(in, BundleKind::NonAssociative, "construct akivis");
            return finish(output_doc(akivis_from_algebra(b, c.options), "Akivis algebra of " + src), c.output, out);
        }
        if (c.what == "dialg2leibniz") {
            const auto& b = require<DialgebraBundle>(in, BundleKind::Dialgebra, "construct dialg2leibniz");
            return finish(output_doc(leibniz_from_dialgebra(b, c.options), "NHLP-algebra of the dialgebra " + src),
                          c.output, out);
        }
        if (c.what == "trivext") {
            const auto& b = require<LeibnizBundle>(in, BundleKind::Leibniz, "construct trivext");
            return finish(output_doc(trivial_extension(b, c.options), "Trivial extension of " + src), c.output, out);
        }
        const auto& b = require<NHLPBundle>(in, BundleKind::NHLP, "construct tensor2");
        return finish(output_doc(tensor_square_nhlp(b, c.variant, c.options),
                                 "Experimental tensor square (" + std::string(to_string(c.variant)) + ") of " + src),
                      c.output, out);
    });
}

int cmd_twist(const TwistCommand& c, std::ostream& out, std::ostream& err)
{
    return guarded(out, err, [&] {
        const BundleDocument in = load_document(c.input);
        const std::string src = c.input.filename().string();
        if (c.module) {
            const auto& b = require<ModuleBundle>(in, BundleKind::Module, "twist --module");
            return finish(output_doc(twist_module(b, c.options), "Twisted module of " + src, in.extra_maps), c.output,
                          out);
        }
        const auto it = in.extra_maps.find(c.map);
        if (it == in.extra_maps.end()) {
            throw InputError("map \"" + c.map + "\" is not present in " + c.input.string());
        }
        const EvenMap& beta = it->second;
        const std::string what = "Twist by " + c.map + "^" + std::to_string(c.power) + " of " + src;
        switch (kind_of(in.bundle)) {
        case BundleKind::Akivis:
            return finish(output_doc(twist_akivis(std::get<AkivisBundle>(in.bundle), beta, c.power, c.options), what,
                                     in.extra_maps),
                          c.output, out);
        case BundleKind::NHLP:
            return finish(output_doc(twist_nhlp(std::get<NHLPBundle>(in.bundle), beta, c.power, c.options), what,
                                     in.extra_maps),
                          c.output, out);
        case BundleKind::Leibniz:
            return finish(output_doc(twist_leibniz(std::get<LeibnizBundle>(in.bundle), beta, c.power, c.options), what,
                                     in.extra_maps),
                          c.output, out);
        default:
            throw InputError("twist needs an akivis, leibniz or nhlp bundle (or --module), got " +
                             std::string(to_string(kind_of(in.bundle))));
        }
    });
}

int cmd_examples(const ExamplesCommand& c, std::ostream& out, std::ostream& err)
{
    return guarded(out, err, [&] {
        if (c.write_dir) {
            if (c.name) {
                fixture(*c.name);
            }
            std::filesystem::create_directories(*c.write_dir);
            for (const auto& info : fixture_list()) {
                if (c.name && *c.name != info.name) {
                    continue;
                }
                const auto path = *c.write_dir / (info.name + ".json");
                write_file(path, serialize_document(fixture(info.name)));
                out << "wrote " << path.string() << "\n";
            }
            return kExitPass;
        }
        if (c.name) {
            out << serialize_document(fixture(*c.name));
            return kExitPass;
        }
        std::size_t width = 0;
        for (const auto& info : fixture_list()) {
            width = std::max(width, info.name.size());
        }
        for (const auto& info : fixture_list()) {
            out << info.name << std::string(width + 2 - info.name.size(), ' ') << info.summary << "\n";
        }
        return kExitPass;
    });
}

} // namespace colorhom
