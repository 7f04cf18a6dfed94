#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "colorhom/commands.hpp"
#include "colorhom/document.hpp"
#include "colorhom/error.hpp"

namespace {

void add_check_flags(CLI::App* app, unsigned& jobs, std::string& mode)
{
    app->add_option("--jobs,-j", jobs, "worker threads (default: $COLORHOM_JOBS or 1)")->check(CLI::PositiveNumber);
    app->add_option("--flexibility", mode, "flexibility convention")
        ->check(CLI::IsMember({"eps-polarized", "literal"}));
}

} // namespace

int main(int argc, char** argv)
{
    using namespace colorhom;

    CLI::App app{"Exact checks and constructions for color Hom-algebras"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    unsigned jobs = default_jobs();
    std::string mode = "eps-polarized";

    CheckCommand check;
    std::string format = "text";
    auto* check_cmd = app.add_subcommand("check", "run the identity suite on a bundle document");
    check_cmd->add_option("input", check.input, "bundle document")->required();
    check_cmd->add_option("--identity", check.identity, "identity id or all");
    check_cmd->add_option("--report", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    add_check_flags(check_cmd, jobs, mode);

    ConstructCommand construct;
    std::string variant = "corrected";
    auto* construct_cmd = app.add_subcommand("construct", "build a derived structure and certify it");
    construct_cmd->add_option("what", construct.what, "akivis, dialg2leibniz, trivext or tensor2")
        ->required()
        ->check(CLI::IsMember({"akivis", "dialg2leibniz", "trivext", "tensor2"}));
    construct_cmd->add_option("input", construct.input, "input document")->required();
    construct_cmd->add_option("output", construct.output, "output document")->required();
    construct_cmd->add_flag("--experimental", construct.experimental, "allow tensor2");
    construct_cmd->add_option("--variant", variant, "tensor2 product: corrected or as-printed")
        ->check(CLI::IsMember({"corrected", "as-printed"}));
    add_check_flags(construct_cmd, jobs, mode);

    TwistCommand twist;
    auto* twist_cmd = app.add_subcommand("twist", "Yau twist by a named even map");
    twist_cmd->add_option("input", twist.input, "input document")->required();
    twist_cmd->add_option("output", twist.output, "output document")->required();
    twist_cmd->add_option("--map", twist.map, "name of the twisting map");
    twist_cmd->add_option("--power", twist.power, "power n of the map");
    twist_cmd->add_flag("--module", twist.module, "twist a module by alpha_L^2");
    add_check_flags(twist_cmd, jobs, mode);

    ExamplesCommand examples;
    auto* examples_cmd = app.add_subcommand("examples", "list or print built-in example documents");
    examples_cmd->add_option("name", examples.name, "example to print");
    examples_cmd->add_option("--write", examples.write_dir, "write documents into a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    const CheckOptions options{jobs, parse_flexibility_mode(mode)};
    if (*check_cmd) {
        check.format = format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
        check.options = options;
        return cmd_check(check, std::cout, std::cerr);
    }
    if (*construct_cmd) {
        construct.variant = parse_tensor_variant(variant);
        construct.options = options;
        return cmd_construct(construct, std::cout, std::cerr);
    }
    if (*twist_cmd) {
        twist.options = options;
        return cmd_twist(twist, std::cout, std::cerr);
    }
    return cmd_examples(examples, std::cout, std::cerr);
}
