#include "mrsc/serial.hpp"

#include "mrsc/errors.hpp"
#include "mrsc/linalg.hpp"

namespace mrsc {

using nlohmann::json;

namespace {

// Rethrows nlohmann's type/key errors as InputError so callers see one
// exception family.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

void check_consistent(bool ok, const char* msg) {
    if (!ok) throw InputError(msg);
}

} // namespace

json field_to_json(const Field& f) {
    return json{{"p", f->characteristic()}, {"m", f->degree()}, {"modulus", f->modulus()}};
}

Field field_from_json(const json& j) {
    return guarded("field", [&] {
        const auto p = j.at("p").get<std::uint64_t>();
        const auto m = j.at("m").get<std::uint32_t>();
        if (j.contains("modulus"))
            return make_field(p, m, j.at("modulus").get<std::vector<std::uint64_t>>());
        return make_field(p, m);
    });
}

json matrix_to_json(const FieldMatrix& m) {
    json data = json::array();
    for (std::uint64_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::uint64_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        data.push_back(std::move(row));
    }
    return json{{"field", field_to_json(m.field)},
                {"rows", m.rows},
                {"cols", m.cols},
                {"data", std::move(data)}};
}

FieldMatrix matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        Field f = field_from_json(j.at("field"));
        const auto rows = j.at("rows").get<std::uint64_t>();
        const auto cols = j.at("cols").get<std::uint64_t>();
        const json& data = j.at("data");
        check_consistent(data.is_array() && data.size() == rows,
                         "matrix: data must hold one array per row");
        std::vector<std::uint64_t> flat;
        flat.reserve(rows * cols);
        for (const auto& row : data) {
            check_consistent(row.is_array() && row.size() == cols,
                             "matrix: every row must hold cols integers");
            for (const auto& v : row) flat.push_back(v.get<std::uint64_t>());
        }
        return FieldMatrix(std::move(f), rows, cols, std::move(flat));
    });
}

json code_to_json(const LinearCode& c) {
    json j = matrix_to_json(c.generator());
    j["n"] = c.n();
    return j;
}

LinearCode code_from_json(const json& j) {
    FieldMatrix g = matrix_from_json(j);
    const auto n = guarded("code", [&] { return j.at("n").get<std::uint64_t>(); });
    check_consistent(n == g.cols, "code: n disagrees with the generator's column count");
    return LinearCode(std::move(g));
}

json certificate_to_json(const MrscCertificate& c) {
    return json{{"verified", c.verified}, {"subsets_checked", c.subsets_checked}};
}

MrscCertificate certificate_from_json(const json& j) {
    return guarded("certificate", [&] {
        return MrscCertificate{j.at("verified").get<bool>(),
                               j.at("subsets_checked").get<std::uint64_t>()};
    });
}

json p2p_scheme_to_json(const P2PScheme& s) {
    return json{{"A", matrix_to_json(s.A)},
                {"H", matrix_to_json(s.H)},
                {"S", matrix_to_json(s.S)},
                {"eps", s.eps},
                {"cost", s.cost},
                {"certificate", certificate_to_json(s.certificate)}};
}

P2PScheme p2p_scheme_from_json(const json& j) {
    P2PScheme s;
    s.A = matrix_from_json(guarded("scheme", [&]() -> const json& { return j.at("A"); }));
    s.H = matrix_from_json(guarded("scheme", [&]() -> const json& { return j.at("H"); }));
    s.S = matrix_from_json(guarded("scheme", [&]() -> const json& { return j.at("S"); }));
    guarded("scheme", [&] {
        s.eps = j.at("eps").get<std::uint64_t>();
        s.cost = j.at("cost").get<std::uint64_t>();
        s.certificate = certificate_from_json(j.at("certificate"));
        return 0;
    });
    check_consistent(same_field(s.A.field, s.H.field) && same_field(s.A.field, s.S.field),
                     "scheme: matrices disagree on the field");
    check_consistent(s.cost == s.H.rows, "scheme: cost disagrees with the encoder row count");
    check_consistent(rank(s.H) == s.H.rows, "scheme: encoder rows are dependent");
    check_consistent(matmul(s.S, s.A) == s.H, "scheme: H != S*A");
    return s;
}

json broadcast_scheme_to_json(const BroadcastScheme& s) {
    return json{{"A", matrix_to_json(s.A)},
                {"B", matrix_to_json(s.B)},
                {"eps", s.eps},
                {"H", matrix_to_json(s.H)},
                {"H_A", matrix_to_json(s.HA)},
                {"H_B", matrix_to_json(s.HB)},
                {"T_A", matrix_to_json(s.TA)},
                {"T_B", matrix_to_json(s.TB)},
                {"S_A", matrix_to_json(s.SA)},
                {"S_B", matrix_to_json(s.SB)},
                {"H_hat", matrix_to_json(s.Hhat)},
                {"cost", s.cost},
                {"theta", s.theta},
                {"regime", s.regime == BroadcastRegime::trivial_intersection
                               ? "trivial-intersection"
                               : "general"},
                {"certificate_A", certificate_to_json(s.certificate_a)},
                {"certificate_B", certificate_to_json(s.certificate_b)}};
}

BroadcastScheme broadcast_scheme_from_json(const json& j) {
    BroadcastScheme s;
    auto mat = [&](const char* key) {
        return matrix_from_json(guarded("scheme", [&]() -> const json& { return j.at(key); }));
    };
    s.A = mat("A");
    s.B = mat("B");
    s.H = mat("H");
    s.HA = mat("H_A");
    s.HB = mat("H_B");
    s.TA = mat("T_A");
    s.TB = mat("T_B");
    s.SA = mat("S_A");
    s.SB = mat("S_B");
    s.Hhat = mat("H_hat");
    guarded("scheme", [&] {
        s.eps = j.at("eps").get<std::uint64_t>();
        s.cost = j.at("cost").get<std::uint64_t>();
        s.theta = j.at("theta").get<std::uint64_t>();
        const auto regime = j.at("regime").get<std::string>();
        if (regime == "trivial-intersection")
            s.regime = BroadcastRegime::trivial_intersection;
        else if (regime == "general")
            s.regime = BroadcastRegime::general;
        else
            throw InputError("scheme: unknown regime '" + regime + "'");
        s.certificate_a = certificate_from_json(j.at("certificate_A"));
        s.certificate_b = certificate_from_json(j.at("certificate_B"));
        return 0;
    });
    check_consistent(s.cost == s.H.rows, "scheme: cost disagrees with the encoder row count");
    check_consistent(rank(s.H) == s.H.rows, "scheme: encoder rows are dependent");
    check_consistent(matmul(s.TA, s.H) == s.HA, "scheme: H_A != T_A*H");
    check_consistent(matmul(s.TB, s.H) == s.HB, "scheme: H_B != T_B*H");
    check_consistent(matmul(s.SA, s.A) == s.HA, "scheme: H_A != S_A*A");
    check_consistent(matmul(s.SB, s.B) == s.HB, "scheme: H_B != S_B*B");
    return s;
}

} // namespace mrsc
