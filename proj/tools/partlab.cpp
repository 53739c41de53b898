#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "partlab/catalog.hpp"

using namespace partlab;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

PartitionClass parseClass(const std::string& name)
{
    if (name == "P") return PartitionClass::all();
    if (name == "D") return PartitionClass::distinct();
    auto tail = [&](size_t at) {
        int k = std::stoi(name.substr(at));
        if (k < 1) throw CLI::ValidationError("--class", "modulus must be >= 1");
        return k;
    };
    if (name.rfind("DS", 0) == 0) return PartitionClass::distinctKStrict(tail(2));
    if (name.rfind("S", 0) == 0) return PartitionClass::kStrict(tail(1));
    if (name.rfind("E", 0) == 0) return PartitionClass::evenRepeatMultiples(tail(1));
    throw CLI::ValidationError("--class", "expected P, D, Sk, DSk or Ek");
}

json seriesToJson(const TruncatedSeries& s)
{
    json terms = json::array();
    const auto& ctx = *s.context();
    for (const auto& [key, coeff] : s.terms()) {
        json exps = json::object();
        std::vector<int> e = ctx.decode(key.packed);
        for (int v = 0; v < ctx.size(); ++v)
            if (e[static_cast<size_t>(v)] != 0) exps[ctx.name(v)] = e[static_cast<size_t>(v)];
        terms.push_back({{"exponents", exps}, {"coeff", coeff.str()}});
    }
    return terms;
}

json reportToJson(const VerificationReport& r)
{
    json j{{"id", r.id},
           {"order", r.order},
           {"status", r.match ? "match" : "mismatch"},
           {"instancesChecked", r.instancesChecked},
           {"timeMs", r.timeMs}};
    if (r.firstDiscrepancy) {
        j["firstDiscrepancy"] = {{"instance", r.firstDiscrepancy->instance},
                                 {"monomial", r.firstDiscrepancy->monomial},
                                 {"lhs", r.firstDiscrepancy->lhs.str()},
                                 {"rhs", r.firstDiscrepancy->rhs.str()}};
    } else {
        j["firstDiscrepancy"] = nullptr;
    }
    return j;
}

// Timing stays in the JSON reports; stdout is byte-for-byte deterministic.
void printReport(const VerificationReport& r)
{
    std::cout << r.id << ": " << (r.match ? "match" : "MISMATCH")
              << " instances=" << r.instancesChecked << " order=" << r.order;
    if (r.firstDiscrepancy)
        std::cout << "  first difference at [" << r.firstDiscrepancy->instance << "] "
                  << r.firstDiscrepancy->monomial << ": " << r.firstDiscrepancy->lhs.str()
                  << " vs " << r.firstDiscrepancy->rhs.str();
    std::cout << "\n";
}

int threadBudget()
{
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("PARTITION_LAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) budget = std::min(budget, cap);
    }
    return budget;
}

void writeOrPrintJson(const json& j, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact partition-identity laboratory"};
    app.require_subcommand(1);

    // enumerate
    auto* cmdEnum = app.add_subcommand("enumerate", "list the partitions of n in a class");
    std::string className = "P";
    int enumN = 0, enumMaxPart = -1, enumMaxLen = -1;
    cmdEnum->add_option("--class", className, "P, D, Sk, DSk or Ek");
    cmdEnum->add_option("--n", enumN, "size to enumerate")->required();
    cmdEnum->add_option("--max-part", enumMaxPart, "largest-part bound");
    cmdEnum->add_option("--max-length", enumMaxLen, "length bound");

    // count
    auto* cmdCount = app.add_subcommand("count", "gap-condition and residue-class counts");
    std::string family = "A";
    int countK = -1, countM = 1, countN = 0;
    bool verbose = false;
    cmdCount->add_option("--family", family, "A or C");
    cmdCount->add_option("--k", countK, "modulus (omit for the mod-3 gap families)");
    cmdCount->add_option("--m", countM, "family index, 1 or 2")->required();
    cmdCount->add_option("--n", countN, "size")->required();
    cmdCount->add_flag("--verbose", verbose, "list the counted partitions");

    // verify / verify-all
    auto* cmdVerify = app.add_subcommand("verify", "check one identity of the catalog");
    std::string verifyId;
    int verifyOrder = -1;
    std::map<std::string, int> filter;
    cmdVerify->add_option("--id", verifyId, "identity id")->required();
    cmdVerify->add_option("--order", verifyOrder, "truncation order");
    for (const char* key : {"k", "N", "M", "nu", "mu", "i", "j", "m", "pattern", "f", "ds"}) {
        cmdVerify->add_option_function<int>(
            std::string("--") + key,
            [&filter, key = std::string(key)](int v) { filter[key] = v; },
            "restrict to instances with this parameter value");
    }

    auto* cmdVerifyAll = app.add_subcommand("verify-all", "check every identity");
    double orderScale = 1.0;
    std::string jsonPath;
    cmdVerifyAll->add_option("--order-scale", orderScale, "multiplier on default orders");
    cmdVerifyAll->add_option("--json", jsonPath, "write the reports to a file ('-' = stdout)");

    // bijection-test
    auto* cmdBij = app.add_subcommand("bijection-test", "exhaustive map checks");
    std::string mapName = "psi_k";
    int bijK = 3, bijMax = 16;
    std::string bijJsonPath;
    cmdBij->add_option("--map", mapName, "psi_k, conjugate, blocks or strip_jump");
    cmdBij->add_option("--k", bijK, "modulus for psi_k / blocks");
    cmdBij->add_option("--max-size", bijMax, "largest partition size checked");
    cmdBij->add_option("--json", bijJsonPath, "write the report to a file ('-' = stdout)");

    // expand
    auto* cmdExpand = app.add_subcommand("expand", "print a closed form's expansion");
    std::string expandId;
    int expandOrder = -1;
    bool expandJson = false;
    cmdExpand->add_option("--id", expandId, "identity id")->required();
    cmdExpand->add_option("--order", expandOrder, "truncation order");
    cmdExpand->add_flag("--json", expandJson, "emit the JSON term list");

    // render
    auto* cmdRender = app.add_subcommand("render", "labelled diagram of a partition");
    std::string partitionText;
    int renderK = 2;
    cmdRender->add_option("--partition", partitionText, "comma-separated parts")->required();
    cmdRender->add_option("--k", renderK, "label modulus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmdEnum)) {
            PartitionClass cls = parseClass(className);
            cls.maxPart = enumMaxPart >= 0 ? enumMaxPart : cls.maxPart;
            cls.maxLength = enumMaxLen >= 0 ? enumMaxLen : cls.maxLength;
            for (const Partition& p : enumerateClass(cls, enumN))
                std::cout << (p.empty() ? "(empty)" : p.text()) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmdCount)) {
            if (countM != 1 && countM != 2)
                throw CLI::ValidationError("--m", "must be 1 or 2");
            std::vector<Partition> members;
            if (family == "A")
                members = countK > 0 ? membersAkm(countN, countK, countM)
                                     : membersAm(countN, countM);
            else if (family == "C")
                members = countK > 0 ? membersCkm(countN, countK, countM)
                                     : membersCm(countN, countM);
            else
                throw CLI::ValidationError("--family", "must be A or C");
            std::cout << members.size() << "\n";
            if (verbose)
                for (const Partition& p : members)
                    std::cout << (p.empty() ? "(empty)" : p.text()) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmdVerify)) {
            if (!findCase(verifyId)) {
                std::cerr << "unknown identity id: " << verifyId << "\nknown ids:\n";
                for (const auto& id : catalogIds()) std::cerr << "  " << id << "\n";
                return 2;
            }
            VerificationReport rep = verifyCase(verifyId, verifyOrder, filter);
            printReport(rep);
            return rep.match ? 0 : 1;
        }

        if (app.got_subcommand(cmdVerifyAll)) {
            const auto& cases = catalog();
            std::vector<VerificationReport> reports(cases.size());
            std::atomic<size_t> next{0};
            int threads = std::min<int>(threadBudget(), static_cast<int>(cases.size()));
            auto worker = [&] {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= cases.size()) return;
                    int order = std::max(
                        4, static_cast<int>(cases[idx].defaultOrder * orderScale + 0.5));
                    reports[idx] = cases[idx].run(order, {});
                }
            };
            std::vector<std::thread> pool;
            for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();

            bool allMatch = true;
            json jreports = json::array();
            for (const auto& r : reports) {
                printReport(r);
                jreports.push_back(reportToJson(r));
                allMatch = allMatch && r.match;
            }
            std::cout << (allMatch ? "all identities match" : "MISMATCHES FOUND") << " ("
                      << reports.size() << " catalog entries)\n";
            if (!jsonPath.empty())
                writeOrPrintJson(json{{"schemaVersion", kSchemaVersion},
                                      {"orderScale", orderScale},
                                      {"reports", jreports}},
                                 jsonPath);
            return allMatch ? 0 : 1;
        }

        if (app.got_subcommand(cmdBij)) {
            BijectionReport rep = runBijectionTest(mapName, bijK, bijMax);
            json failures = json::array();
            for (const auto& f : rep.failures)
                failures.push_back(
                    {{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
            json j{{"schemaVersion", kSchemaVersion}, {"map", rep.map},     {"k", rep.k},
                   {"range", rep.range},             {"casesChecked", rep.casesChecked},
                   {"failures", failures}};
            writeOrPrintJson(j, bijJsonPath);
            return rep.failures.empty() ? 0 : 1;
        }

        if (app.got_subcommand(cmdExpand)) {
            const CatalogCase* c = findCase(expandId);
            if (!c) {
                std::cerr << "unknown identity id: " << expandId << "\nknown ids:\n";
                for (const auto& id : catalogIds()) std::cerr << "  " << id << "\n";
                return 2;
            }
            if (!c->series) {
                std::cerr << expandId << " is a counting comparison; nothing to expand\n";
                return 2;
            }
            int order = expandOrder > 0 ? expandOrder : c->defaultOrder;
            TruncatedSeries s = c->representativeRhs(order);
            if (expandJson)
                std::cout << json{{"schemaVersion", kSchemaVersion},
                                  {"id", expandId},
                                  {"order", s.order()},
                                  {"terms", seriesToJson(s)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << s.text() << "\n";
            return 0;
        }

        if (app.got_subcommand(cmdRender)) {
            Partition p = Partition::parse(partitionText);
            std::cout << renderFerrers(p, renderK);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
