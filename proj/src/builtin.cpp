#include "braidstat/builtin.hpp"

#include <sstream>

namespace braidstat {

namespace {
std::vector<std::string> split_spec(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}
}  // namespace

FieldPtr field_for_order(long d) {
    if (d <= 2) return Field::create(FieldSpec::rational());
    return Field::create(FieldSpec::cyclotomic(d));
}

Rack builtin_rack(const std::string& name) {
    auto parts = split_spec(name);
    const std::string& head = parts[0];
    if (head == "joyce") return joyce_quandle();
    if (head == "s_wedge") return wedge_rack();
    if (head == "s3_transpositions") return s3_transposition_quandle();
    if (head == "s4_transpositions") return s4_transposition_quandle();
    if (head == "trivial" && parts.size() == 2) return trivial_rack(std::stoi(parts[1]));
    if (head == "cyclic" && parts.size() == 2) return cyclic_rack(std::stoi(parts[1]));
    if (head == "product" && parts.size() >= 3) {
        // product:<a>:<b> where each side may itself carry a :N argument
        // re-split greedily: try every split point
        for (size_t cut = 1; cut + 1 <= parts.size() - 1; ++cut) {
            std::string a = parts[1];
            for (size_t i = 2; i <= cut; ++i) a += ":" + parts[i];
            std::string b = parts[cut + 1];
            for (size_t i = cut + 2; i < parts.size(); ++i) b += ":" + parts[i];
            try {
                return product_rack(builtin_rack(a), builtin_rack(b));
            } catch (const Error&) {
                continue;
            }
        }
    }
    throw validation_error("UnknownBuiltin", "unknown rack name: " + name);
}

Cocycle2 builtin_cocycle(const Rack& r, const std::string& spec) {
    auto parts = split_spec(spec);
    if (parts[0] == "wedge") return wedge_cocycle(r, Field::create(FieldSpec::rational()));
    if (parts[0] == "pm") return pm_cocycle(r, Field::create(FieldSpec::rational()));
    if (parts[0] == "const" && parts.size() == 2) {
        const std::string& v = parts[1];
        if (v.rfind("zeta", 0) == 0) {
            long d = std::stol(v.substr(4));
            FieldPtr F = field_for_order(d);
            return constant_cocycle(r, F, F->root_of_unity(d));
        }
        FieldPtr F = Field::create(FieldSpec::rational());
        return constant_cocycle(r, F, F->from_int(std::stoll(v)));
    }
    throw validation_error("UnknownBuiltin", "unknown cocycle spec: " + spec);
}

BraidedSpace builtin_space(const std::string& spec) {
    auto parts = split_spec(spec);
    const std::string& head = parts[0];
    if (head == "kappa_wedge") return kappa_wedge(Field::create(FieldSpec::rational()));
    if (head == "kappa_pm") return kappa_pm(Field::create(FieldSpec::rational()));
    if (head == "kappa_zeta" && parts.size() == 2) {
        long d = std::stol(parts[1]);
        FieldPtr F = field_for_order(d);
        return kappa_zeta(F, F->root_of_unity(d));
    }
    if (head == "rack_wedge" && parts.size() >= 2) {
        std::string rest = parts[1];
        for (size_t i = 2; i < parts.size(); ++i) rest += ":" + parts[i];
        return rack_wedge_space(builtin_rack(rest), Field::create(FieldSpec::rational()));
    }
    if (head == "rack_pm" && parts.size() >= 2) {
        std::string rest = parts[1];
        for (size_t i = 2; i < parts.size(); ++i) rest += ":" + parts[i];
        return rack_pm_space(builtin_rack(rest), Field::create(FieldSpec::rational()));
    }
    if (head == "rackspace" && parts.size() >= 3) {
        // rackspace:<rack...>:<cocycle...>; cocycle specs start with const/wedge/pm
        for (size_t cut = 1; cut + 1 <= parts.size() - 1; ++cut) {
            std::string rname = parts[1];
            for (size_t i = 2; i <= cut; ++i) rname += ":" + parts[i];
            std::string cname = parts[cut + 1];
            for (size_t i = cut + 2; i < parts.size(); ++i) cname += ":" + parts[i];
            if (cname.rfind("const", 0) != 0 && cname != "wedge" && cname != "pm") continue;
            Rack r = builtin_rack(rname);
            return rack_space(r, builtin_cocycle(r, cname));
        }
    }
    throw validation_error("UnknownBuiltin", "unknown space spec: " + spec);
}

}  // namespace braidstat
