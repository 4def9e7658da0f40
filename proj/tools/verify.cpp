#include "verify.hpp"

#include "iqf/api.hpp"
#include "iqf/errors.hpp"

#include <filesystem>

using iqf::Json;

namespace {

bool contains(const Json& expect, const Json& actual, std::string& why, const std::string& path) {
    if (expect.is_object()) {
        if (!actual.is_object()) {
            why = path + ": expected an object";
            return false;
        }
        for (const auto& [key, value] : expect.items()) {
            if (!actual.contains(key)) {
                why = path + "." + key + ": missing";
                return false;
            }
            if (!contains(value, actual.at(key), why, path + "." + key)) return false;
        }
        return true;
    }
    if (expect.is_array()) {
        if (!actual.is_array() || actual.size() != expect.size()) {
            why = path + ": expected " + expect.dump() + ", got " + actual.dump();
            return false;
        }
        for (std::size_t k = 0; k < expect.size(); ++k)
            if (!contains(expect[k], actual[k], why, path + "[" + std::to_string(k) + "]")) return false;
        return true;
    }
    if (expect != actual) {
        why = path + ": expected " + expect.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

Json run_case(const std::string& op, const Json& input, const Json& args) {
    namespace api = iqf::api;
    if (op == "bg-form") return api::bg_form(input);
    if (op == "bg-balance") return api::bg_balance(input);
    if (op == "bg-roots")
        return api::bg_roots(input, args.value("set", 1), args.value("max_len", std::size_t{0}), args.value("bound", 0LL));
    if (op == "bg-line") return api::bg_line(input);
    if (op == "qf-info") return api::qf_info(input);
    if (op == "qf-realize") return api::qf_realize(input);
    if (op == "qf-canonical-c") return api::qf_canonical_c(input);
    if (op == "qf-solve") return api::qf_solve(input, args.value("d", std::string("0")), args.value("bound", 8LL), false);
    if (op == "gentle-euler") return api::gentle_euler(input);
    if (op == "evaluate") {
        iqf::QuadraticForm q = iqf::form_from_json(input);
        return Json{{"value", iqf::int_to_json(q.evaluate(iqf::vec_from_json(args.at("x"))))}};
    }
    throw iqf::FormatError("unknown fixture op " + op);
}

}  // namespace

int run_verify(const std::string& dir, const std::string& only, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    Json manifest;
    std::vector<Json> cases;
    try {
        manifest = iqf::load_json((fs::path(dir) / "manifest.json").string());
        for (const Json& c : manifest.at("cases")) {
            if (!only.empty() && c.at("suite") != only && c.at("name") != only) continue;
            const fs::path input = fs::path(dir) / c.at("input").get<std::string>();
            if (!fs::exists(input)) throw iqf::FormatError("missing fixture " + input.string());
            cases.push_back(c);
        }
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << "\n";
        return 2;
    }
    if (cases.empty()) {
        err << "verify: no cases match '" << only << "'\n";
        return 2;
    }
    std::size_t failed = 0;
    for (const Json& c : cases) {
        const std::string label = c.at("suite").get<std::string>() + "/" + c.at("name").get<std::string>();
        std::string why;
        bool ok = false;
        try {
            const Json input = iqf::load_json((fs::path(dir) / c.at("input").get<std::string>()).string());
            const Json args = c.value("args", Json::object());
            Json got = run_case(c.at("op"), input, args);
            if (c.contains("expect_error"))
                why = "expected error " + c.at("expect_error").get<std::string>() + ", got success";
            else
                ok = contains(c.at("expect"), got, why, "");
        } catch (const iqf::Error& e) {
            ok = c.contains("expect_error") && c.at("expect_error") == iqf::kind_name(e.kind);
            if (!ok) why = e.what();
        } catch (const std::exception& e) {
            why = e.what();
        }
        out << (ok ? "[PASS] " : "[FAIL] ") << label;
        if (!ok) out << "  (" << why << ")";
        out << "\n";
        failed += !ok;
    }
    out << (cases.size() - failed) << "/" << cases.size() << " golden cases passed\n";
    return failed ? 1 : 0;
}
