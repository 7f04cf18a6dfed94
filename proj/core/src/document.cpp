#include "colorhom/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "colorhom/error.hpp"
#include "colorhom/graded_linalg.hpp"
#include "json_util.hpp"

#ifndef COLORHOM_VERSION
#define COLORHOM_VERSION "0.0.0"
#endif

namespace colorhom {

namespace {

using Json = nlohmann::json;
using detail::OrderedJson;

struct OpShape {
    const char* name;
    std::size_t arity;
};

std::vector<OpShape> ops_for(BundleKind kind)
{
    switch (kind) {
    case BundleKind::NonAssociative:
        return {{"mu", 2}};
    case BundleKind::Akivis:
        return {{"bracket", 2}, {"ternary", 3}};
    case BundleKind::Leibniz:
        return {{"bracket", 2}};
    case BundleKind::NHLP:
        return {{"mu", 2}, {"bracket", 2}};
    case BundleKind::Dialgebra:
        return {{"dashv", 2}, {"vdash", 2}};
    case BundleKind::Module:
        return {{"left", 2}, {"right", 2}};
    }
    return {};
}

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw InputError((path.empty() ? std::string("/") : path) + ": " + message);
}

std::string first_problem(const CheckReport& r)
{
    if (r.precondition_failure) {
        return *r.precondition_failure;
    }
    if (const auto* v = r.first_violation()) {
        return "at " + tuple_to_string(v->tuple) + (v->detail.empty() ? "" : " (" + v->detail + ")");
    }
    return "failed";
}

const Json& member(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing key \"") + key + "\"");
    }
    return *it;
}

long long as_int(const Json& v, const std::string& path)
{
    if (!v.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return v.get<long long>();
}

std::size_t as_index(const Json& v, std::size_t bound, const std::string& path)
{
    const long long i = as_int(v, path);
    if (i < 0 || static_cast<std::size_t>(i) >= bound) {
        fail(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(i);
}

const std::string& as_string(const Json& v, const std::string& path)
{
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get_ref<const std::string&>();
}

Scalar as_scalar(const Json& v, const CyclotomicField& field, const std::string& path)
{
    try {
        if (v.is_string()) {
            return parse_scalar(field, v.get_ref<const std::string&>());
        }
        if (v.is_array()) {
            std::vector<std::string> coeffs;
            for (std::size_t i = 0; i < v.size(); ++i) {
                coeffs.push_back(as_string(v[i], path + "/" + std::to_string(i)));
            }
            return parse_scalar(field, coeffs);
        }
    } catch (const InputError& e) {
        if (std::string_view(e.what()).starts_with("/")) {
            throw;
        }
        fail(path, e.what());
    }
    fail(path, "expected a scalar string or a list of coefficient strings");
}

GroupElement as_degree(const Json& v, const GradingGroup& group, const std::string& path)
{
    if (!v.is_array()) {
        fail(path, "expected an integer list");
    }
    std::vector<long long> c;
    for (std::size_t i = 0; i < v.size(); ++i) {
        c.push_back(as_int(v[i], path + "/" + std::to_string(i)));
    }
    if (c.size() != group.generator_count()) {
        fail(path, "degree needs " + std::to_string(group.generator_count()) + " coordinates");
    }
    const GroupElement g = group.element(c);
    if (!std::equal(c.begin(), c.end(), g.coordinates().begin())) {
        fail(path, "degree is not canonical in " + group.to_string() + " (torsion coordinates must lie in [0, m))");
    }
    return g;
}

GradedSpace as_space(const Json& v, const CyclotomicField& field, const GradingGroup& group, const std::string& path)
{
    if (!v.is_array()) {
        fail(path, "expected a list of basis elements");
    }
    std::vector<BasisElement> basis;
    std::set<std::string> names;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        std::string name = as_string(member(v[i], "name", p), p + "/name");
        if (name.empty()) {
            fail(p + "/name", "empty basis name");
        }
        if (!names.insert(name).second) {
            fail(p + "/name", "duplicate basis name \"" + name + "\"");
        }
        basis.push_back({std::move(name), as_degree(member(v[i], "degree", p), group, p + "/degree")});
    }
    return GradedSpace(field, group, std::move(basis));
}

MultilinearMap as_op(const Json& v, std::vector<std::size_t> dims, std::size_t out_dim, const CyclotomicField& field,
                     const std::string& path)
{
    if (!v.is_array()) {
        fail(path, "expected a list of table entries");
    }
    MultilinearMap op(field, dims, out_dim);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string p = path + "/" + std::to_string(k);
        const Json& args = member(v[k], "args", p);
        if (!args.is_array() || args.size() != dims.size()) {
            fail(p + "/args", "expected " + std::to_string(dims.size()) + " argument indices");
        }
        std::vector<std::size_t> t;
        for (std::size_t s = 0; s < dims.size(); ++s) {
            t.push_back(as_index(args[s], dims[s], p + "/args/" + std::to_string(s)));
        }
        if (!seen.insert(t).second) {
            fail(p + "/args", "duplicate entry for " + tuple_to_string(t));
        }
        const Json& out = member(v[k], "out", p);
        if (!out.is_object()) {
            fail(p + "/out", "expected an object mapping output index to scalar");
        }
        Vector value;
        for (const auto& [key, c] : out.items()) {
            const std::string q = p + "/out/" + key;
            std::size_t idx = 0;
            try {
                std::size_t used = 0;
                const unsigned long long parsed = std::stoull(key, &used);
                if (used != key.size() || key.empty() || !std::isdigit(static_cast<unsigned char>(key[0]))) {
                    throw std::invalid_argument(key);
                }
                idx = static_cast<std::size_t>(parsed);
            } catch (const std::exception&) {
                fail(q, "output key must be a basis index");
            }
            if (idx >= out_dim) {
                fail(q, "output index " + std::to_string(idx) + " out of range [0, " + std::to_string(out_dim) + ")");
            }
            value.add(idx, as_scalar(c, field, q));
        }
        op.set(t, std::move(value));
    }
    return op;
}

EvenMap as_map(const Json& v, std::size_t dim, const CyclotomicField& field, const std::string& path)
{
    if (v.is_string() && v.get_ref<const std::string&>() == "identity") {
        return EvenMap::identity(field, dim);
    }
    if (!v.is_array() || v.size() != dim) {
        fail(path, "expected \"identity\" or a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    ScalarMatrix rows;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string p = path + "/" + std::to_string(i);
        if (!v[i].is_array() || v[i].size() != dim) {
            fail(p, "expected a row of " + std::to_string(dim) + " scalars");
        }
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < dim; ++j) {
            row.push_back(as_scalar(v[i][j], field, p + "/" + std::to_string(j)));
        }
        rows.push_back(std::move(row));
    }
    EvenMap f(field, dim, dim);
    if (dim != 0) {
        f = EvenMap::from_rows(field, rows);
    }
    return f;
}

void require_even(const CheckReport& r, const std::string& path)
{
    if (!r.passed()) {
        fail(path, "not even: " + first_problem(r));
    }
}

struct Header {
    const CyclotomicField* field;
    GradingGroup group;
    Bicharacter eps;
};

Header as_header(const Json& doc, BundleKind kind, const std::string& path)
{
    const Json& f = member(doc, "field", path);
    const long long order = as_int(member(f, "cyclotomic_order", path + "/field"), path + "/field/cyclotomic_order");
    if (order < 1 || order > CyclotomicField::kMaxOrder) {
        fail(path + "/field/cyclotomic_order", "must lie in [1, " + std::to_string(CyclotomicField::kMaxOrder) + "]");
    }
    const CyclotomicField& field = CyclotomicField::get(static_cast<unsigned>(order));

    GradingGroup group;
    if (auto it = doc.find("grading"); it != doc.end()) {
        const std::string gp = path + "/grading";
        const long long rank = as_int(member(*it, "free_rank", gp), gp + "/free_rank");
        if (rank < 0) {
            fail(gp + "/free_rank", "must be nonnegative");
        }
        const Json& tor = member(*it, "torsion", gp);
        if (!tor.is_array()) {
            fail(gp + "/torsion", "expected an integer list");
        }
        std::vector<long long> orders;
        for (std::size_t i = 0; i < tor.size(); ++i) {
            const long long m = as_int(tor[i], gp + "/torsion/" + std::to_string(i));
            if (m < 2) {
                fail(gp + "/torsion/" + std::to_string(i), "torsion orders must be at least 2");
            }
            orders.push_back(m);
        }
        group = GradingGroup(static_cast<std::size_t>(rank), std::move(orders));
    }
    if (kind == BundleKind::Dialgebra && !group.is_trivial()) {
        fail(path + "/grading", "dialgebras are ungraded; the grading group must be trivial");
    }

    const std::size_t n = group.generator_count();
    ScalarMatrix m;
    auto it = doc.find("bicharacter");
    if (it == doc.end()) {
        if (n != 0) {
            fail(path, "missing key \"bicharacter\"");
        }
    } else {
        const std::string bp = path + "/bicharacter";
        if (!it->is_array() || it->size() != n) {
            fail(bp, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Json& row = (*it)[i];
            if (!row.is_array() || row.size() != n) {
                fail(bp + "/" + std::to_string(i), "expected a row of " + std::to_string(n) + " scalars");
            }
            std::vector<Scalar> r;
            for (std::size_t j = 0; j < n; ++j) {
                r.push_back(as_scalar(row[j], field, bp + "/" + std::to_string(i) + "/" + std::to_string(j)));
            }
            m.push_back(std::move(r));
        }
    }
    Bicharacter eps(group, field, m);
    const auto check = validate_bicharacter(eps);
    if (!check.passed()) {
        fail(path + "/bicharacter", "invalid bicharacter: " + first_problem(check));
    }
    return {&field, group, std::move(eps)};
}

void check_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& path)
{
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            fail(path + "/" + key, "unknown key");
        }
    }
}

std::map<std::string, MultilinearMap> as_ops(const Json& doc, BundleKind kind, const GradedSpace& space,
                                             const GradedSpace* module_space, const std::string& path)
{
    const Json& ops = member(doc, "ops", path);
    if (!ops.is_object()) {
        fail(path + "/ops", "expected an object");
    }
    std::set<std::string> allowed;
    std::map<std::string, MultilinearMap> out;
    for (const auto& shape : ops_for(kind)) {
        allowed.insert(shape.name);
        const std::string p = path + "/ops/" + shape.name;
        auto it = ops.find(shape.name);
        if (it == ops.end()) {
            fail(path + "/ops", std::string("missing operation \"") + shape.name + "\"");
        }
        if (kind == BundleKind::Module) {
            const bool left = std::string_view(shape.name) == "left";
            const std::size_t n = space.dim();
            const std::size_t m = module_space->dim();
            auto op = as_op(*it, left ? std::vector{n, m} : std::vector{m, n}, m, space.field(), p);
            const std::vector<const GradedSpace*> slots =
                left ? std::vector{&space, module_space} : std::vector{module_space, &space};
            require_even(check_evenness(op, slots, *module_space), p);
            out.emplace(shape.name, std::move(op));
        } else {
            auto op = as_op(*it, std::vector<std::size_t>(shape.arity, space.dim()), space.dim(), space.field(), p);
            require_even(check_evenness(op, space), p);
            out.emplace(shape.name, std::move(op));
        }
    }
    check_keys(ops, allowed, path + "/ops");
    return out;
}

EvenMap required_map(const Json& maps, const char* name, const GradedSpace& space, const std::string& path)
{
    const std::string p = path + "/maps/" + name;
    auto it = maps.find(name);
    if (it == maps.end()) {
        fail(path + "/maps", std::string("missing map \"") + name + "\"");
    }
    EvenMap f = as_map(*it, space.dim(), space.field(), p);
    require_even(check_evenness(f, space), p);
    return f;
}

LeibnizBundle as_leibniz(const Json& doc, const std::string& path);

BundleDocument as_document(const Json& doc, const std::string& path, bool top_level)
{
    if (!doc.is_object()) {
        fail(path, "expected an object");
    }
    if (top_level) {
        const auto& schema = as_string(member(doc, "schema", path), path + "/schema");
        if (schema != kBundleSchema) {
            fail(path + "/schema", "unsupported schema \"" + schema + "\" (expected " + std::string(kBundleSchema) + ")");
        }
    }
    const std::string& kind_text = as_string(member(doc, "kind", path), path + "/kind");
    BundleKind kind;
    try {
        kind = parse_bundle_kind(kind_text);
    } catch (const InputError& e) {
        fail(path + "/kind", e.what());
    }

    BundleDocument out{NonAssocBundle{GradedSpace::ungraded(CyclotomicField::rationals(), 0),
                                      Bicharacter::trivial(CyclotomicField::rationals()),
                                      MultilinearMap::internal(CyclotomicField::rationals(), 2, 0),
                                      EvenMap(CyclotomicField::rationals(), 0, 0)},
                       {},
                       {},
                       std::nullopt};
    if (auto it = doc.find("description"); it != doc.end()) {
        out.description = as_string(*it, path + "/description");
    }

    if (kind == BundleKind::Module) {
        check_keys(doc, {"schema", "kind", "description", "algebra", "basis", "ops", "maps", "report"}, path);
        LeibnizBundle algebra = as_leibniz(member(doc, "algebra", path), path + "/algebra");
        GradedSpace mspace =
            as_space(member(doc, "basis", path), algebra.space.field(), algebra.space.group(), path + "/basis");
        auto ops = as_ops(doc, kind, algebra.space, &mspace, path);
        const Json& maps = member(doc, "maps", path);
        EvenMap alphaM = required_map(maps, "alphaM", mspace, path);
        check_keys(maps, {"alphaM"}, path + "/maps");
        ModuleBundle mb{std::move(algebra), std::move(mspace), std::move(ops.at("left")), std::move(ops.at("right")),
                        std::move(alphaM)};
        validate(mb);
        out.bundle = std::move(mb);
        return out;
    }

    check_keys(doc, {"schema", "kind", "description", "field", "grading", "bicharacter", "basis", "ops", "maps", "report"},
               path);
    Header h = as_header(doc, kind, path);
    GradedSpace space = as_space(member(doc, "basis", path), *h.field, h.group, path + "/basis");
    auto ops = as_ops(doc, kind, space, nullptr, path);
    const Json& maps = member(doc, "maps", path);
    if (!maps.is_object()) {
        fail(path + "/maps", "expected an object");
    }
    EvenMap alpha = required_map(maps, "alpha", space, path);
    for (const auto& [name, value] : maps.items()) {
        if (name != "alpha") {
            out.extra_maps.emplace(name, required_map(maps, name.c_str(), space, path));
        }
    }
    switch (kind) {
    case BundleKind::NonAssociative:
        out.bundle = NonAssocBundle{std::move(space), std::move(h.eps), std::move(ops.at("mu")), std::move(alpha)};
        break;
    case BundleKind::Akivis:
        out.bundle = AkivisBundle{std::move(space), std::move(h.eps), std::move(ops.at("bracket")),
                                  std::move(ops.at("ternary")), std::move(alpha)};
        break;
    case BundleKind::Leibniz:
        out.bundle = LeibnizBundle{std::move(space), std::move(h.eps), std::move(ops.at("bracket")), std::move(alpha)};
        break;
    case BundleKind::NHLP:
        out.bundle = NHLPBundle{std::move(space), std::move(h.eps), std::move(ops.at("mu")),
                                std::move(ops.at("bracket")), std::move(alpha)};
        break;
    case BundleKind::Dialgebra:
        out.bundle = DialgebraBundle{std::move(space), std::move(ops.at("dashv")), std::move(ops.at("vdash")),
                                     std::move(alpha)};
        break;
    case BundleKind::Module:
        break;
    }
    validate(out.bundle);
    return out;
}

LeibnizBundle as_leibniz(const Json& doc, const std::string& path)
{
    BundleDocument d = as_document(doc, path, false);
    if (kind_of(d.bundle) != BundleKind::Leibniz) {
        fail(path + "/kind", "a module's algebra must be of kind leibniz");
    }
    return std::get<LeibnizBundle>(std::move(d.bundle));
}

// Serialization ------------------------------------------------------------

OrderedJson write_matrix(const ScalarMatrix& m)
{
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : m) {
        OrderedJson row = OrderedJson::array();
        for (const auto& s : r) {
            row.push_back(detail::scalar_json(s));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson write_map(const EvenMap& f)
{
    if (f.is_identity()) {
        return "identity";
    }
    return write_matrix(f.to_rows());
}

OrderedJson write_op(const MultilinearMap& op)
{
    OrderedJson entries = OrderedJson::array();
    op.for_each([&](const MultilinearMap::Tuple& t, const Vector& v) {
        OrderedJson e;
        e["args"] = t;
        e["out"] = detail::vector_json(v);
        entries.push_back(std::move(e));
    });
    return entries;
}

OrderedJson write_basis(const GradedSpace& s)
{
    OrderedJson basis = OrderedJson::array();
    for (const auto& b : s.basis()) {
        OrderedJson e;
        e["name"] = b.name;
        e["degree"] = std::vector<long long>(b.degree.coordinates().begin(), b.degree.coordinates().end());
        basis.push_back(std::move(e));
    }
    return basis;
}

void write_header(OrderedJson& j, const GradedSpace& space, const Bicharacter& eps)
{
    j["field"] = {{"cyclotomic_order", space.field().order()}};
    j["grading"] = {{"free_rank", space.group().free_rank()}, {"torsion", space.group().torsion_orders()}};
    j["bicharacter"] = write_matrix(eps.generator_matrix());
    j["basis"] = write_basis(space);
}

OrderedJson write_bundle(const StructureBundle& bundle, const std::map<std::string, EvenMap>& extra,
                         const std::string& description, bool top_level)
{
    OrderedJson j;
    if (top_level) {
        j["schema"] = kBundleSchema;
    }
    j["kind"] = to_string(kind_of(bundle));
    if (!description.empty()) {
        j["description"] = description;
    }
    OrderedJson ops = OrderedJson::object();
    OrderedJson maps = OrderedJson::object();
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, NonAssocBundle>) {
                write_header(j, b.space, b.eps);
                ops["mu"] = write_op(b.mu);
                maps["alpha"] = write_map(b.alpha);
            } else if constexpr (std::is_same_v<T, AkivisBundle>) {
                write_header(j, b.space, b.eps);
                ops["bracket"] = write_op(b.bracket);
                ops["ternary"] = write_op(b.ternary);
                maps["alpha"] = write_map(b.alpha);
            } else if constexpr (std::is_same_v<T, LeibnizBundle>) {
                write_header(j, b.space, b.eps);
                ops["bracket"] = write_op(b.bracket);
                maps["alpha"] = write_map(b.alpha);
            } else if constexpr (std::is_same_v<T, NHLPBundle>) {
                write_header(j, b.space, b.eps);
                ops["mu"] = write_op(b.mu);
                ops["bracket"] = write_op(b.bracket);
                maps["alpha"] = write_map(b.alpha);
            } else if constexpr (std::is_same_v<T, DialgebraBundle>) {
                write_header(j, b.space, Bicharacter::trivial(b.space.group(), b.space.field()));
                ops["dashv"] = write_op(b.dashv);
                ops["vdash"] = write_op(b.vdash);
                maps["alpha"] = write_map(b.alpha);
            } else {
                j["algebra"] = write_bundle(StructureBundle(b.algebra), {}, {}, false);
                j["basis"] = write_basis(b.module_space);
                ops["left"] = write_op(b.left);
                ops["right"] = write_op(b.right);
                maps["alphaM"] = write_map(b.alphaM);
            }
        },
        bundle);
    for (const auto& [name, f] : extra) {
        maps[name] = write_map(f);
    }
    j["ops"] = std::move(ops);
    j["maps"] = std::move(maps);
    return j;
}

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("parse error"); pos != std::string::npos) {
            msg = msg.substr(pos);
        }
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
    }
}

} // namespace

std::string_view tool_version()
{
    return COLORHOM_VERSION;
}

BundleDocument parse_document(std::string_view text)
{
    return as_document(parse_json(text), "", true);
}

std::string read_document_text(const std::filesystem::path& path)
{
    std::filesystem::path p = path;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(p, ec)) {
        std::filesystem::path alt = path;
        alt += ".json";
        if (std::filesystem::is_regular_file(alt, ec)) {
            p = alt;
        } else {
            throw InputError("cannot read \"" + path.string() + "\": no such file");
        }
    }
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw InputError("cannot open \"" + p.string() + "\"");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BundleDocument load_document(const std::filesystem::path& path)
{
    return parse_document(read_document_text(path));
}

std::string serialize_document(const BundleDocument& doc)
{
    OrderedJson j = write_bundle(doc.bundle, doc.extra_maps, doc.description, true);
    if (doc.report) {
        j["report"] = detail::report_json(*doc.report);
    }
    return j.dump(2) + "\n";
}

std::string document_digest(std::string_view text)
{
    return sha256_hex(parse_json(text).dump());
}

std::string report_to_json(const CheckReport& report, bool pretty)
{
    const auto j = detail::report_json(report);
    return pretty ? j.dump(2) : j.dump();
}

} // namespace colorhom
