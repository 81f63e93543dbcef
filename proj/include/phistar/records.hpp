#pragma once

// Flat output records and their text, csv and jsonl encodings.
//
// csv:   header n,q,q_base,q_exp,phi_n,phi_star,I,c0,c1,set_tag; I is
//        semicolon-joined; absent fields are empty cells; LF line endings.
// jsonl: one object per line with the same field names; phi_n and phi_star
//        are decimal strings, the other integers are bare numbers, absent
//        fields are null.

#include "phistar/application.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace phistar {

struct OutputRecord {
    u64 n = 0;
    u64 q = 0;
    std::optional<u64> q_base;
    std::optional<unsigned> q_exp;
    mpz_class phi_n;
    mpz_class phi_star;
    std::optional<std::vector<u64>> indices;  // "I"
    std::optional<u64> c0;
    std::optional<u64> c1;
    std::optional<std::string> set_tag;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr std::string_view csv_header = "n,q,q_base,q_exp,phi_n,phi_star,I,c0,c1,set_tag";

namespace detail {

inline std::optional<std::string> set_tag_text(SetTag tag) {
    switch (tag) {
        case SetTag::R2:
        case SetTag::S2:
        case SetTag::T2: return std::string(to_string(tag));
        default: return std::nullopt;
    }
}

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

inline u64 parse_u64(const std::string& text) {
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0) throw std::invalid_argument("not an integer: '" + text + "'");
    return to_u64(v);
}

}  // namespace detail

inline OutputRecord make_record(const PairRow& row) {
    OutputRecord rec;
    rec.n = row.n;
    rec.q = to_u64(row.q.value());
    rec.q_base = to_u64(row.q.base());
    rec.q_exp = row.q.exponent();
    rec.phi_n = row.phi_n;
    rec.phi_star = row.phi_star;
    if (row.factorization) rec.indices = row.factorization->indices();
    rec.set_tag = detail::set_tag_text(row.set);
    return rec;
}

inline OutputRecord make_record(const ClassificationRow& row) {
    const PhiStarResult r = phi_star(row.n, row.q.value());
    OutputRecord rec;
    rec.n = row.n;
    rec.q = to_u64(row.q.value());
    rec.q_base = to_u64(row.q.base());
    rec.q_exp = row.q.exponent();
    rec.phi_n = r.phi_n;
    rec.phi_star = r.phi_star;
    rec.indices = row.factorization.indices();
    rec.c0 = row.c0;
    rec.c1 = row.c1;
    return rec;
}

inline std::string join_indices(const std::vector<u64>& indices, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(indices[i]);
    }
    return out;
}

inline std::string to_csv(const OutputRecord& r) {
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::string out;
    out += std::to_string(r.n) + ',' + std::to_string(r.q) + ',' + opt(r.q_base) + ',' + opt(r.q_exp) + ',';
    out += r.phi_n.get_str() + ',' + r.phi_star.get_str() + ',';
    out += (r.indices ? join_indices(*r.indices, ";") : std::string()) + ',';
    out += opt(r.c0) + ',' + opt(r.c1) + ',' + r.set_tag.value_or("");
    return out;
}

inline OutputRecord parse_csv(std::string_view line) {
    const auto cells = detail::split(line, ',');
    if (cells.size() != 10) throw std::invalid_argument("csv record must have 10 cells: '" + std::string(line) + "'");
    OutputRecord r;
    r.n = detail::parse_u64(cells[0]);
    r.q = detail::parse_u64(cells[1]);
    if (!cells[2].empty()) r.q_base = detail::parse_u64(cells[2]);
    if (!cells[3].empty()) r.q_exp = static_cast<unsigned>(detail::parse_u64(cells[3]));
    if (r.phi_n.set_str(cells[4], 10) != 0 || r.phi_star.set_str(cells[5], 10) != 0)
        throw std::invalid_argument("csv record: bad phi_n/phi_star");
    // An empty I cell is the empty multiset; csv cannot express "absent".
    r.indices.emplace();
    if (!cells[6].empty())
        for (const auto& part : detail::split(cells[6], ';')) r.indices->push_back(detail::parse_u64(part));
    if (!cells[7].empty()) r.c0 = detail::parse_u64(cells[7]);
    if (!cells[8].empty()) r.c1 = detail::parse_u64(cells[8]);
    if (!cells[9].empty()) r.set_tag = cells[9];
    return r;
}

inline std::string to_jsonl(const OutputRecord& r) {
    nlohmann::ordered_json j;
    auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
    j["n"] = r.n;
    j["q"] = r.q;
    j["q_base"] = opt(r.q_base);
    j["q_exp"] = opt(r.q_exp);
    j["phi_n"] = r.phi_n.get_str();
    j["phi_star"] = r.phi_star.get_str();
    j["I"] = opt(r.indices);
    j["c0"] = opt(r.c0);
    j["c1"] = opt(r.c1);
    j["set_tag"] = opt(r.set_tag);
    return j.dump();
}

inline OutputRecord parse_jsonl(std::string_view line) {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    r.n = j.at("n").get<u64>();
    r.q = j.at("q").get<u64>();
    if (!j.at("q_base").is_null()) r.q_base = j["q_base"].get<u64>();
    if (!j.at("q_exp").is_null()) r.q_exp = j["q_exp"].get<unsigned>();
    if (r.phi_n.set_str(j.at("phi_n").get<std::string>(), 10) != 0 ||
        r.phi_star.set_str(j.at("phi_star").get<std::string>(), 10) != 0)
        throw std::invalid_argument("jsonl record: bad phi_n/phi_star");
    if (!j.at("I").is_null()) r.indices = j["I"].get<std::vector<u64>>();
    if (!j.at("c0").is_null()) r.c0 = j["c0"].get<u64>();
    if (!j.at("c1").is_null()) r.c1 = j["c1"].get<u64>();
    if (!j.at("set_tag").is_null()) r.set_tag = j["set_tag"].get<std::string>();
    return r;
}

inline std::string to_text(const OutputRecord& r) {
    std::ostringstream out;
    out << "n=" << r.n << " q=" << r.q;
    if (r.q_base && r.q_exp && *r.q_exp > 1) out << " (" << *r.q_base << '^' << *r.q_exp << ')';
    out << " phi_n=" << r.phi_n.get_str() << " phi_star=" << r.phi_star.get_str();
    if (r.indices) out << " I=" << (r.indices->empty() ? "-" : join_indices(*r.indices, ","));
    if (r.c0) out << " c0=" << *r.c0;
    if (r.c1) out << " c1=" << *r.c1;
    if (r.set_tag) out << " set=" << *r.set_tag;
    return out.str();
}

enum class RecordFormat { text, csv, jsonl };

inline void write_records(std::ostream& out, const std::vector<OutputRecord>& records, RecordFormat format) {
    if (format == RecordFormat::csv) out << csv_header << '\n';
    for (const auto& r : records) {
        switch (format) {
            case RecordFormat::text: out << to_text(r); break;
            case RecordFormat::csv: out << to_csv(r); break;
            case RecordFormat::jsonl: out << to_jsonl(r); break;
        }
        out << '\n';
    }
}

}  // namespace phistar
