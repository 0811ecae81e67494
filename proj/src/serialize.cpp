#include "glnq/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "glnq/error.hpp"

namespace glnq {

std::string display(const CyclotomicSum& x) {
    if (auto r = x.rational_value()) return to_decimal(*r);
    return x.canonical().to_string();
}

std::string to_string(Verdict v) { return v == Verdict::Polynomial ? "Polynomial" : "NonPolynomial"; }

json to_json(const Partition& mu) { return json(mu.parts()); }

Partition partition_from_json(const json& j) {
    require(j.is_array(), ErrorKind::InvalidInput, "partition must be an array");
    return Partition(j.get<std::vector<int>>());
}

json to_json(const Fq& F, const ClassIndex& idx) {
    json out = json::array();
    for (const auto& [f, lambda] : idx.parts)
        out.push_back({{"poly", f.coeffs}, {"text", poly_to_string(F, f)}, {"partition", to_json(lambda)}});
    return out;
}

ClassIndex class_index_from_json(const json& j) {
    require(j.is_array(), ErrorKind::InvalidInput, "class index must be an array");
    ClassIndex idx;
    for (const auto& e : j) idx.parts.emplace_back(PolyQ(e.at("poly").get<std::vector<int>>()), partition_from_json(e.at("partition")));
    idx.normalize();
    return idx;
}

json to_json(const CyclotomicSum& x) {
    json terms = json::array();
    for (const auto& [e, c] : x.terms()) terms.push_back({e, c.get_str()});
    const auto z = x.to_complex();
    return {{"modulus", x.modulus()},
            {"terms", terms},
            {"display", display(x)},
            {"approx", {static_cast<double>(z.real()), static_cast<double>(z.imag())}}};
}

CyclotomicSum cyclotomic_from_json(const json& j) {
    CyclotomicSum x(j.at("modulus").get<u64>());
    for (const auto& t : j.at("terms")) x.add_term(t.at(0).get<u64>(), Int(t.at(1).get<std::string>()));
    return x;
}

json to_json(const CountResult& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"mu", to_json(r.mu)},
            {"q", r.q.get_str()},
            {"value", r.value.get_str()},
            {"method", to_string(r.method)},
            {"box", r.box}};
}

CountResult count_from_json(const json& j) {
    CountResult r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.mu = partition_from_json(j.at("mu"));
    r.q = Int(j.at("q").get<std::string>());
    r.value = Int(j.at("value").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    r.box = j.at("box").get<bool>();
    return r;
}

json to_json(const FitResult& r) {
    json coeffs = json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(to_decimal(c));
    json samples = json::array();
    for (const auto& q : r.samples) samples.push_back(q.get_str());
    json out = {{"n", r.n},
                {"k", r.k},
                {"residue", r.residue},
                {"coefficients", coeffs},
                {"verdict", to_string(r.verdict)},
                {"samples", samples}};
    if (r.witness) out["witness"] = r.witness->get_str();
    return out;
}

FitResult fit_from_json(const json& j) {
    FitResult r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.residue = j.at("residue").get<int>();
    for (const auto& c : j.at("coefficients")) {
        Rational x(c.get<std::string>());
        x.canonicalize();
        r.coefficients.push_back(x);
    }
    const auto v = j.at("verdict").get<std::string>();
    require(v == "Polynomial" || v == "NonPolynomial", ErrorKind::InvalidInput, "unknown verdict '" + v + "'");
    r.verdict = v == "Polynomial" ? Verdict::Polynomial : Verdict::NonPolynomial;
    if (j.contains("witness")) r.witness = Int(j.at("witness").get<std::string>());
    if (j.contains("samples"))
        for (const auto& q : j.at("samples")) r.samples.emplace_back(q.get<std::string>());
    return r;
}

json to_json(const std::vector<LimitRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"q", r.q.get_str()},
                       {"p", to_decimal(r.p)},
                       {"target", to_decimal(r.target)},
                       {"gap", to_decimal(r.gap)},
                       {"gap_approx", r.gap.get_d()},
                       {"method", to_string(r.method)},
                       {"box", r.box}});
    return out;
}

json to_json(const Fq& F, const CharacterTable& t) {
    json classes = json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c)
        classes.push_back({{"index", to_json(F, t.classes[c])}, {"label", t.classes[c].to_string(F)}, {"size", t.class_sizes[c].get_str()}});
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json values = json::array();
        for (const auto& v : t.values[r]) values.push_back(to_json(v));
        rows.push_back({{"index", to_json(F, t.rows[r])}, {"label", t.rows[r].to_string(F)}, {"values", values}});
    }
    return {{"q", t.q}, {"n", t.n}, {"classes", classes}, {"characters", rows}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv(const Fq& F, const CharacterTable& t) {
    std::ostringstream out;
    out << "class";
    for (const auto& c : t.classes) out << ',' << csv_field(c.to_string(F));
    out << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << csv_field(t.rows[r].to_string(F));
        for (const auto& v : t.values[r]) out << ',' << csv_field(display(v));
        out << '\n';
    }
    return out.str();
}

std::string to_pretty(const Fq& F, const CharacterTable& t) {
    std::vector<std::string> header{"character \\ class"};
    std::vector<std::string> sizes{"size"};
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        header.push_back(t.classes[c].to_string(F));
        sizes.push_back(t.class_sizes[c].get_str());
    }
    std::vector<std::vector<std::string>> cells{header, sizes};
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::vector<std::string> line{t.rows[r].to_string(F)};
        for (const auto& v : t.values[r]) line.push_back(display(v));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << std::left << std::setw(static_cast<int>(width[i])) << line[i];
            if (i + 1 < line.size()) out << " | ";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace glnq
