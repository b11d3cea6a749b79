#include "glarb/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace glarb {

namespace {

Int mod_reduce(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& tok, int line) {
    std::string t = trim(tok);
    if (t.empty()) throw ParseError(line, "empty integer");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError(line, "bad integer '" + t + "'");
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError(line, "bad integer '" + t + "'");
    }
    return Int(t);
}

}  // namespace

GroupDesc::GroupDesc(int free_rank, std::vector<Int> moduli)
    : free_rank_(free_rank), moduli_(std::move(moduli)) {
    if (free_rank_ < 0) throw ParseError(0, "negative free rank");
    for (const Int& n : moduli_) {
        if (n < 2) throw ParseError(0, "torsion modulus must be at least 2");
    }
}

std::optional<Int> GroupDesc::size() const {
    if (free_rank_ > 0) return std::nullopt;
    Int s = 1;
    for (const Int& n : moduli_) s *= n;
    return s;
}

std::string GroupDesc::str() const {
    std::ostringstream out;
    bool wrote = false;
    if (free_rank_ == 1) {
        out << "Z";
        wrote = true;
    } else if (free_rank_ > 1 || moduli_.empty()) {
        out << "Z^" << free_rank_;
        wrote = true;
    }
    for (const Int& n : moduli_) {
        if (wrote) out << " x ";
        out << "Z/" << n.get_str();
        wrote = true;
    }
    return out.str();
}

GroupPtr GroupDesc::make(int free_rank, std::vector<Int> moduli) {
    return std::make_shared<const GroupDesc>(free_rank, std::move(moduli));
}

GroupPtr GroupDesc::parse(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::istringstream in(trim(text));
    std::string word;
    // tokens are separated by 'x' surrounded by whitespace
    while (in >> word) {
        if (word == "x") {
            tokens.push_back(cur);
            cur.clear();
        } else {
            if (!cur.empty()) cur += " ";
            cur += word;
        }
    }
    tokens.push_back(cur);

    int free_rank = 0;
    std::vector<Int> moduli;
    bool seen_torsion = false;
    for (const std::string& raw : tokens) {
        std::string t = trim(raw);
        if (t.empty()) throw ParseError(0, "empty factor in group descriptor");
        if (t == "Z") {
            if (seen_torsion) throw ParseError(0, "free factor after torsion factor");
            free_rank += 1;
        } else if (t.rfind("Z^", 0) == 0) {
            if (seen_torsion) throw ParseError(0, "free factor after torsion factor");
            Int r = parse_int(t.substr(2), 0);
            if (r < 0 || !r.fits_sint_p())
                throw ParseError(0, "bad free rank '" + t + "'");
            free_rank += static_cast<int>(r.get_si());
        } else if (t.rfind("Z/", 0) == 0) {
            seen_torsion = true;
            Int n = parse_int(t.substr(2), 0);
            if (n < 2) throw ParseError(0, "modulus must be at least 2 in '" + t + "'");
            moduli.push_back(n);
        } else {
            throw ParseError(0, "bad group factor '" + t + "'");
        }
    }
    return make(free_rank, std::move(moduli));
}

Elem::Elem(GroupPtr group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != group_->arity())
        throw MismatchError("element has " + std::to_string(coords_.size()) +
                            " coordinates, group arity is " + std::to_string(group_->arity()));
    const auto& mods = group_->moduli();
    int r = group_->free_rank();
    for (size_t i = 0; i < mods.size(); ++i) {
        coords_[r + i] = mod_reduce(coords_[r + i], mods[i]);
    }
}

Elem Elem::zero(const GroupPtr& group) {
    return Elem(group, std::vector<Int>(group->arity()));
}

bool Elem::is_zero() const {
    for (const Int& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

std::optional<Int> Elem::order() const {
    int r = group_->free_rank();
    for (int i = 0; i < r; ++i) {
        if (coords_[i] != 0) return std::nullopt;
    }
    Int ord = 1;
    const auto& mods = group_->moduli();
    for (size_t i = 0; i < mods.size(); ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), mods[i].get_mpz_t(), coords_[r + i].get_mpz_t());
        Int per = mods[i] / g;
        mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), per.get_mpz_t());
    }
    return ord;
}

Elem Elem::times(const Int& k) const {
    std::vector<Int> c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] * k;
    return Elem(group_, std::move(c));
}

std::string Elem::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += coords_[i].get_str();
    }
    out += ")";
    return out;
}

Elem Elem::parse(const GroupPtr& group, const std::string& text, int line) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError(line, "element must be a tuple '(a,b,...)', got '" + t + "'");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<Int> coords;
    std::string cur;
    std::istringstream in(body);
    if (!trim(body).empty()) {
        while (std::getline(in, cur, ',')) coords.push_back(parse_int(cur, line));
    }
    if (static_cast<int>(coords.size()) != group->arity())
        throw ParseError(line, "element '" + t + "' has " + std::to_string(coords.size()) +
                                   " coordinates, expected " + std::to_string(group->arity()));
    return Elem(group, std::move(coords));
}

Elem operator+(const Elem& a, const Elem& b) {
    require_same_group(a, b);
    std::vector<Int> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return Elem(a.group_, std::move(c));
}

Elem operator-(const Elem& a, const Elem& b) {
    require_same_group(a, b);
    std::vector<Int> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return Elem(a.group_, std::move(c));
}

Elem Elem::operator-() const {
    std::vector<Int> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return Elem(group_, std::move(c));
}

bool Elem::operator==(const Elem& o) const {
    return *group_ == *o.group_ && coords_ == o.coords_;
}

bool Elem::operator<(const Elem& o) const {
    require_same_group(*this, o);
    for (size_t i = 0; i < coords_.size(); ++i) {
        int c = cmp(coords_[i], o.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void require_same_group(const Elem& a, const Elem& b) {
    if (!(*a.group() == *b.group()))
        throw MismatchError("elements of " + a.group()->str() + " and " + b.group()->str() +
                            " combined");
}

void require_group(const Elem& a, const GroupDesc& g, const char* what) {
    if (!(*a.group() == g))
        throw MismatchError(std::string(what) + ": element of " + a.group()->str() +
                            " used with " + g.str());
}

namespace {

// Rows: one torsion relation n_i * e_{r+i} per modulus, then the generators.
ZMatrix relation_matrix(const GroupDesc& g, const std::vector<Elem>& gens) {
    int c = g.arity();
    int k = static_cast<int>(g.moduli().size());
    ZMatrix m(k + static_cast<int>(gens.size()), c);
    for (int i = 0; i < k; ++i) m.at(i, g.free_rank() + i) = g.moduli()[i];
    for (size_t j = 0; j < gens.size(); ++j) {
        for (int i = 0; i < c; ++i) m.at(k + static_cast<int>(j), i) = gens[j].coords()[i];
    }
    return m;
}

}  // namespace

SubgroupDesc::SubgroupDesc(GroupPtr group, std::vector<Elem> generators)
    : group_(std::move(group)), gens_(std::move(generators)) {
    for (const Elem& e : gens_) require_group(e, *group_, "subgroup generator");
    echelon_ = row_echelon_lattice(relation_matrix(*group_, gens_));
}

bool SubgroupDesc::contains(const Elem& e) const {
    require_group(e, *group_, "subgroup membership");
    return in_row_lattice(echelon_, e.coords());
}

bool SubgroupDesc::is_whole_group() const {
    // A subgroup is everything iff it contains each standard generator.
    int c = group_->arity();
    for (int i = 0; i < c; ++i) {
        std::vector<Int> v(c);
        v[i] = 1;
        if (!in_row_lattice(echelon_, v)) return false;
    }
    return true;
}

std::optional<std::vector<Elem>> SubgroupDesc::bounded_elements(std::size_t cap) const {
    std::set<Elem> seen;
    std::vector<Elem> frontier;
    seen.insert(Elem::zero(group_));
    frontier.push_back(Elem::zero(group_));
    while (!frontier.empty()) {
        Elem cur = frontier.back();
        frontier.pop_back();
        for (const Elem& g : gens_) {
            for (const Elem& next : {cur + g, cur - g}) {
                if (seen.insert(next).second) {
                    if (seen.size() > cap) return std::nullopt;
                    frontier.push_back(next);
                }
            }
        }
    }
    return std::vector<Elem>(seen.begin(), seen.end());
}

QuotientMap quotient(const GroupPtr& g, const SubgroupDesc& sub) {
    if (!(*sub.group() == *g)) throw MismatchError("quotient by a subgroup of a different group");
    SmithResult snf = smith_normal_form(relation_matrix(*g, sub.generators()));
    int c = g->arity();

    QuotientMap q;
    q.source_ = g;
    q.v_ = std::move(snf.v);
    for (int j = snf.rank; j < c; ++j) q.free_pos_.push_back(j);
    for (int j = 0; j < snf.rank; ++j) {
        const Int& d = snf.d.at(j, j);
        if (d >= 2) {
            q.torsion_pos_.push_back(j);
            q.torsion_mod_.push_back(d);
        }
    }
    q.quotient_ = GroupDesc::make(static_cast<int>(q.free_pos_.size()), q.torsion_mod_);
    return q;
}

Elem QuotientMap::project(const Elem& e) const {
    require_group(e, *source_, "quotient projection");
    int c = source_->arity();
    std::vector<Int> y(c);
    for (int j = 0; j < c; ++j) {
        Int s = 0;
        for (int i = 0; i < c; ++i) s += e.coords()[i] * v_.at(i, j);
        y[j] = s;
    }
    std::vector<Int> out;
    out.reserve(free_pos_.size() + torsion_pos_.size());
    for (int j : free_pos_) out.push_back(y[j]);
    for (int j : torsion_pos_) out.push_back(y[j]);
    return Elem(quotient_, std::move(out));
}

}  // namespace glarb
