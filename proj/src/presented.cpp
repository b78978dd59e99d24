#include "qhopf/presented.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace qhopf {

void nc_add(NCPoly& p, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace(w, c);
    if (!fresh) {
        Scalar s = it->second + c;
        if (s.is_zero())
            p.erase(it);
        else
            it->second = s;
    }
}

void nc2_add(NCPoly2& p, const Word& a, const Word& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, fresh] = p.try_emplace(std::move(key), c);
    if (!fresh) {
        Scalar s = it->second + c;
        if (s.is_zero())
            p.erase(it);
        else
            it->second = s;
    }
}

NCPoly nc_scaled(const NCPoly& p, const Scalar& c) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : p) r.emplace(w, v * c);
    return r;
}

// ---------------------------------------------------------------------------

RewriteSystem::RewriteSystem(const Field& F, std::vector<std::string> gen_names, std::vector<long> gen_weights)
    : F_(&F), names_(std::move(gen_names)), weights_(std::move(gen_weights)) {
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw field_error("weights/names size mismatch");
    for (long w : weights_)
        if (w <= 0) throw field_error("generator weights must be positive");
    rules_by_first_.resize(names_.size());
}

uint32_t RewriteSystem::gen_index(const std::string& name) const {
    for (uint32_t g = 0; g < names_.size(); ++g)
        if (names_[g] == name) return g;
    throw field_error("unknown generator: " + name);
}

void RewriteSystem::add_rule(Word lhs, NCPoly rhs) {
    if (lhs.empty()) throw field_error("empty rule pattern");
    uint32_t id = uint32_t(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs)});
    rules_by_first_[rules_.back().lhs[0]].push_back(id);
    nf_cache_.clear();
}

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
    long wa = 0, wb = 0;
    for (uint32_t g : a) wa += weights_[g];
    for (uint32_t g : b) wb += weights_[g];
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::optional<std::pair<uint32_t, size_t>> RewriteSystem::find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (uint32_t rid : rules_by_first_[w[pos]]) {
            const Word& pat = rules_[rid].lhs;
            if (pos + pat.size() > w.size()) continue;
            if (std::equal(pat.begin(), pat.end(), w.begin() + pos)) return std::make_pair(rid, pos);
        }
    }
    return std::nullopt;
}

bool RewriteSystem::is_normal_word(const Word& w) const { return !find_redex(w).has_value(); }

NCPoly RewriteSystem::normal_form(const Word& w0) const {
    auto cached = nf_cache_.find(w0);
    if (cached != nf_cache_.end()) return *cached->second;

    NCPoly done;
    std::deque<std::pair<Word, Scalar>> work;
    work.push_back({w0, F_->one()});
    size_t steps = 0;
    while (!work.empty()) {
        auto [w, c] = std::move(work.front());
        work.pop_front();
        if (c.is_zero()) continue;
        auto redex = find_redex(w);
        if (!redex) {
            nc_add(done, w, c);
            continue;
        }
        if (++steps > step_budget)
            throw field_error("rewriting step budget exceeded on " + word_str(w0) + " (rule " +
                              word_str(rules_[redex->first].lhs) + ")");
        const auto& [rid, pos] = *redex;
        const RewriteRule& rule = rules_[rid];
        for (const auto& [rw, rc] : rule.rhs) {
            Word nw;
            nw.reserve(w.size() - rule.lhs.size() + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + rule.lhs.size(), w.end());
            work.push_back({std::move(nw), c * rc});
        }
    }
    if (nf_cache_.size() < (1u << 20))
        nf_cache_.emplace(w0, std::make_shared<const NCPoly>(done));
    return done;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
    NCPoly r;
    for (const auto& [w, c] : p) {
        if (is_normal_word(w)) {
            nc_add(r, w, c);
            continue;
        }
        for (const auto& [nw, nc] : normal_form(w)) nc_add(r, nw, c * nc);
    }
    return r;
}

NCPoly RewriteSystem::mul(const NCPoly& a, const NCPoly& b) const {
    NCPoly r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Scalar c = ca * cb;
            if (is_normal_word(w)) {
                nc_add(r, w, c);
            } else {
                for (const auto& [nw, nc] : normal_form(w)) nc_add(r, nw, c * nc);
            }
        }
    return r;
}

NCPoly2 RewriteSystem::mul2(const NCPoly2& a, const NCPoly2& b) const {
    NCPoly2 r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word l = wa.first;
            l.insert(l.end(), wb.first.begin(), wb.first.end());
            Word rr = wa.second;
            rr.insert(rr.end(), wb.second.begin(), wb.second.end());
            Scalar c = ca * cb;
            NCPoly ln = normal_form(l), rn = normal_form(rr);
            for (const auto& [lw, lc] : ln)
                for (const auto& [rw2, rc] : rn) nc2_add(r, lw, rw2, c * lc * rc);
        }
    return r;
}

bool RewriteSystem::check_termination(std::string* offender) const {
    for (const auto& rule : rules_)
        for (const auto& [w, c] : rule.rhs)
            if (!word_less(w, rule.lhs)) {
                if (offender) *offender = word_str(rule.lhs) + " -> " + word_str(w);
                return false;
            }
    return true;
}

Report RewriteSystem::check_confluence() const {
    Report rep;
    bool ok = true;
    std::string witness;
    size_t pairs = 0;
    auto resolve = [&](const Word& super, uint32_t r1, size_t p1, uint32_t r2, size_t p2) {
        ++pairs;
        auto apply = [&](uint32_t rid, size_t pos) {
            const RewriteRule& rule = rules_[rid];
            NCPoly out;
            for (const auto& [rw, rc] : rule.rhs) {
                Word nw;
                nw.insert(nw.end(), super.begin(), super.begin() + pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), super.begin() + pos + rule.lhs.size(), super.end());
                for (const auto& [fw, fc] : normal_form(nw)) nc_add(out, fw, rc * fc);
            }
            return out;
        };
        NCPoly a = apply(r1, p1), b = apply(r2, p2);
        if (a != b && ok) {
            ok = false;
            witness = "unresolved overlap on " + word_str(super);
        }
    };
    for (uint32_t i = 0; i < rules_.size(); ++i)
        for (uint32_t j = 0; j < rules_.size(); ++j) {
            const Word& u = rules_[i].lhs;
            const Word& v = rules_[j].lhs;
            for (size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
                if (!std::equal(u.end() - k, u.end(), v.begin())) continue;
                Word super(u);
                super.insert(super.end(), v.begin() + k, v.end());
                resolve(super, i, 0, j, u.size() - k);
            }
            if (i != j && v.size() <= u.size()) {
                for (size_t pos = 0; pos + v.size() <= u.size(); ++pos)
                    if (std::equal(v.begin(), v.end(), u.begin() + pos)) resolve(u, i, 0, j, pos);
            }
        }
    std::string term_offender;
    bool term = check_termination(&term_offender);
    rep.add("termination order", term, term ? "" : term_offender);
    rep.add("critical pairs resolve", ok, ok ? std::to_string(pairs) + " overlaps checked" : witness);
    return rep;
}

std::optional<std::vector<Word>> RewriteSystem::enumerate_basis(size_t cap) const {
    std::vector<size_t> max_run(names_.size(), 0);
    for (uint32_t g = 0; g < names_.size(); ++g) {
        size_t best = 0;
        for (const auto& rule : rules_) {
            if (!rule.lhs.empty() && std::all_of(rule.lhs.begin(), rule.lhs.end(), [&](uint32_t x) { return x == g; }))
                best = best ? std::min(best, rule.lhs.size()) : rule.lhs.size();
        }
        if (best == 0) return std::nullopt;
        max_run[g] = best - 1;
    }
    size_t total_len = 0;
    for (size_t r : max_run) total_len += r;
    std::vector<Word> out;
    Word cur;
    std::function<bool()> dfs = [&]() -> bool {
        if (out.size() > cap) return false;
        out.push_back(cur);
        if (cur.size() >= total_len) return true;
        for (uint32_t g = 0; g < names_.size(); ++g) {
            cur.push_back(g);
            bool normal = true;
            for (const auto& rule : rules_) {
                const Word& pat = rule.lhs;
                if (pat.size() <= cur.size() &&
                    std::equal(pat.begin(), pat.end(), cur.end() - long(pat.size()))) {
                    normal = false;
                    break;
                }
            }
            if (normal && !dfs()) return false;
            cur.pop_back();
        }
        return true;
    };
    if (!dfs()) return std::nullopt;
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return word_less(a, b); });
    return out;
}

std::string RewriteSystem::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += " ";
        s += names_[w[i]];
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string RewriteSystem::poly_str(const NCPoly& p) const {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + F_->to_string(c) + ")*" + word_str(w);
    }
    return s;
}

// ---------------------------------------------------------------------------
// PresentedHopf

NCPoly2 PresentedHopf::comul(const Word& w) const {
    NCPoly2 acc;
    acc[{Word{}, Word{}}] = field().one();
    for (uint32_t g : w) acc = rs.mul2(acc, comul_gen[g]);
    return acc;
}

NCPoly2 PresentedHopf::comul(const NCPoly& p) const {
    NCPoly2 r;
    for (const auto& [w, c] : p)
        for (const auto& [ab, v] : comul(w)) nc2_add(r, ab.first, ab.second, c * v);
    return r;
}

Scalar PresentedHopf::counit(const Word& w) const {
    Scalar s = field().one();
    for (uint32_t g : w) {
        s = s * counit_gen[g];
        if (s.is_zero()) break;
    }
    return s;
}

Scalar PresentedHopf::counit(const NCPoly& p) const {
    Scalar s = field().zero();
    for (const auto& [w, c] : p) s = s + c * counit(w);
    return s;
}

NCPoly PresentedHopf::antipode(const Word& w) const {
    NCPoly acc;
    acc[Word{}] = field().one();
    for (uint32_t g : w) acc = rs.mul(antipode_gen[g], acc);  // anti-homomorphism
    return acc;
}

NCPoly PresentedHopf::antipode(const NCPoly& p) const {
    NCPoly r;
    for (const auto& [w, c] : p)
        for (const auto& [sw, v] : antipode(w)) nc_add(r, sw, c * v);
    return r;
}

NCPoly PresentedHopf::antipode_inv(const NCPoly& p) const {
    if (antipode_inv_gen.empty()) throw field_error("antipode inverse not provided");
    NCPoly r;
    for (const auto& [w, c] : p) {
        NCPoly acc;
        acc[Word{}] = field().one();
        for (uint32_t g : w) acc = rs.mul(antipode_inv_gen[g], acc);
        for (const auto& [sw, v] : acc) nc_add(r, sw, c * v);
    }
    return r;
}

bool PresentedHopf::verify_relation(const NCPoly& lhs, const NCPoly& rhs) const {
    return rs.normal_form(lhs) == rs.normal_form(rhs);
}

Report PresentedHopf::verify_rule_compatibility() const {
    Report rep;
    bool dok = true, eok = true, sok = true;
    std::string dw, ew, sw;
    for (const auto& rule : rs.rules()) {
        NCPoly lhs;
        lhs[rule.lhs] = field().one();
        if (dok && comul(rs.normal_form(lhs)) != comul(rs.normal_form(rule.rhs))) {
            dok = false;
            dw = rs.word_str(rule.lhs);
        }
        if (eok && counit(rs.normal_form(lhs)) != counit(rs.normal_form(rule.rhs))) {
            eok = false;
            ew = rs.word_str(rule.lhs);
        }
        if (sok &&
            rs.normal_form(antipode(rs.normal_form(lhs))) != rs.normal_form(antipode(rs.normal_form(rule.rhs)))) {
            sok = false;
            sw = rs.word_str(rule.lhs);
        }
    }
    rep.add("coproduct respects relations", dok, dw);
    rep.add("counit respects relations", eok, ew);
    rep.add("antipode respects relations", sok, sw);
    return rep;
}

HopfData PresentedHopf::to_structure_constants(size_t dim_cap) const {
    auto basis = rs.enumerate_basis(dim_cap);
    if (!basis) throw field_error("basis not enumerable within cap " + std::to_string(dim_cap));
    auto self = std::make_shared<PresentedHopf>(*this);
    PresentedOracle oracle(self, *basis);
    return materialize(oracle);
}

NCPoly PresentedHopf::parse(const std::string& expr) const {
    NCPoly out;
    const std::string& s = expr;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < s.size() && isspace((unsigned char)s[i])) ++i;
    };
    int sign = 1;
    skip_ws();
    while (i < s.size()) {
        skip_ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        Scalar coef = field().from_int(sign);
        Word w;
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            skip_ws();
            if (i >= s.size() || s[i] == '+' || s[i] == '-') break;
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (isdigit((unsigned char)s[i])) {
                std::string num;
                while (i < s.size() && (isdigit((unsigned char)s[i]) || s[i] == '/')) num += s[i++];
                auto slash = num.find('/');
                Rat r = slash == std::string::npos
                            ? Rat(BigInt(num))
                            : Rat(BigInt(num.substr(0, slash)), BigInt(num.substr(slash + 1)));
                coef = coef * field().from_rat(r);
                any = true;
                continue;
            }
            std::string name;
            while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_')) name += s[i++];
            if (name.empty()) throw field_error("parse error near '" + s.substr(i, 8) + "'");
            long power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                if (i < s.size() && s[i] == '-') e += s[i++];
                while (i < s.size() && isdigit((unsigned char)s[i])) e += s[i++];
                power = std::stol(e);
            }
            any = true;
            if (name == "q") {
                coef = coef * field().q_pow(power);
            } else if (name == "1") {
                // the unit word
            } else {
                uint32_t g = rs.gen_index(name);
                if (power < 0) throw field_error("negative generator power in expression");
                for (long t = 0; t < power; ++t) w.push_back(g);
            }
        }
        if (any) nc_add(out, w, coef);
        sign = 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// PresentedOracle

PresentedOracle::PresentedOracle(std::shared_ptr<const PresentedHopf> P, std::vector<Word> basis)
    : P_(std::move(P)), basis_(std::move(basis)), unit_(uint32_t(basis_.size())) {
    for (uint32_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    auto it = index_.find(Word{});
    if (it == index_.end()) throw field_error("basis does not contain the unit word");
    unit_.set(it->second, P_->field().one());
}

SparseVec PresentedOracle::to_vec(const NCPoly& p) const {
    SparseVec v(dim());
    for (const auto& [w, c] : p) {
        auto it = index_.find(w);
        if (it == index_.end()) throw field_error("normal form leaves basis: " + P_->rs.word_str(w));
        v.add(it->second, c);
    }
    return v;
}

SparseVec PresentedOracle::mul(uint32_t i, uint32_t j) const {
    uint64_t key = (uint64_t(i) << 32) | j;
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
    Word w = basis_[i];
    w.insert(w.end(), basis_[j].begin(), basis_[j].end());
    SparseVec v = to_vec(P_->rs.normal_form(w));
    return mul_memo_.emplace(key, std::move(v)).first->second;
}

SparseVec PresentedOracle::comul(uint32_t i) const {
    auto it = comul_memo_.find(i);
    if (it != comul_memo_.end()) return it->second;
    uint32_t n = dim();
    SparseVec v(n * n);
    for (const auto& [ab, c] : P_->comul(basis_[i])) {
        auto l = index_.find(ab.first), r = index_.find(ab.second);
        if (l == index_.end() || r == index_.end()) throw field_error("coproduct leaves basis");
        v.add(l->second * n + r->second, c);
    }
    return comul_memo_.emplace(i, std::move(v)).first->second;
}

SparseVec PresentedOracle::antipode(uint32_t i) const {
    auto it = antipode_memo_.find(i);
    if (it != antipode_memo_.end()) return it->second;
    SparseVec v = to_vec(P_->rs.normal_form(P_->antipode(basis_[i])));
    return antipode_memo_.emplace(i, std::move(v)).first->second;
}

// ---------------------------------------------------------------------------
// PresentedCqt

PresentedCqt::PresentedCqt(std::shared_ptr<const PresentedHopf> host, SparseMatrix gen_table)
    : P_(std::move(host)), table_(std::move(gen_table)) {
    if (table_.rows != P_->rs.num_gens() || table_.cols != P_->rs.num_gens())
        throw field_error("cqt generator table has wrong shape");
}

Scalar PresentedCqt::eval_words(const Word& x, const Word& y) const {
    const Field& F = P_->field();
    if (x.empty()) return P_->counit(y);
    if (y.empty()) return P_->counit(x);
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Scalar out = F.zero();
    if (x.size() == 1 && y.size() == 1) {
        out = table_.get(x[0], y[0]);
    } else if (x.size() > 1) {
        Word g{x[0]}, rest(x.begin() + 1, x.end());
        for (const auto& [ab, c] : P_->comul(y)) {
            Scalar r1 = eval_words(g, ab.first);
            if (r1.is_zero()) continue;
            Scalar r2 = eval_words(rest, ab.second);
            if (r2.is_zero()) continue;
            out = out + c * r1 * r2;
        }
    } else {
        Word h{y[0]}, rest(y.begin() + 1, y.end());
        for (const auto& [ab, c] : P_->comul_gen[x[0]]) {
            Scalar r1 = eval_words(ab.first, rest);
            if (r1.is_zero()) continue;
            Scalar r2 = eval_words(ab.second, h);
            if (r2.is_zero()) continue;
            out = out + c * r1 * r2;
        }
    }
    memo_.emplace(std::move(key), out);
    return out;
}

Scalar PresentedCqt::eval(const NCPoly& x, const NCPoly& y) const {
    Scalar s = P_->field().zero();
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) s = s + cx * cy * eval_words(wx, wy);
    return s;
}

// ---------------------------------------------------------------------------
// rule-file io

RewriteSystem parse_rewrite_file(const Field& F, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<RewriteSystem> rs;
    std::vector<std::string> names;
    std::vector<long> weights;
    auto tokenize = [](const std::string& s) {
        std::vector<std::string> toks;
        std::istringstream ss(s);
        std::string t;
        while (ss >> t) toks.push_back(t);
        return toks;
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "gens") {
            names.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if (toks[0] == "weights") {
            for (size_t i = 1; i < toks.size(); ++i) weights.push_back(std::stol(toks[i]));
            continue;
        }
        if (!rs) rs = RewriteSystem(F, names, weights);
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw field_error("rule line missing '->': " + line);
        PresentedHopf tmp(*rs);
        NCPoly lhs = tmp.parse(line.substr(0, arrow));
        NCPoly rhs = tmp.parse(line.substr(arrow + 2));
        if (lhs.size() != 1 || !lhs.begin()->second.is_one())
            throw field_error("rule lhs must be a single monic word: " + line);
        rs->add_rule(lhs.begin()->first, rhs);
    }
    if (!rs) rs = RewriteSystem(F, names, weights);
    return *rs;
}

std::string serialize_rules(const RewriteSystem& rs) {
    std::string out = "gens";
    for (uint32_t g = 0; g < rs.num_gens(); ++g) out += " " + rs.gen_name(g);
    out += "\n";
    for (const auto& rule : rs.rules()) {
        out += rs.word_str(rule.lhs) + " -> ";
        out += rule.rhs.empty() ? "0" : rs.poly_str(rule.rhs);
        out += "\n";
    }
    return out;
}

}  // namespace qhopf
