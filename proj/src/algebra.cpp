#include "specsupp/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace specsupp::algmod {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw InvalidInput("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    throw InvalidInput("unknown arrow '" + name + "'");
}

Quiver Quiver::reversed() const {
    Quiver r;
    r.vertices = vertices;
    for (const auto& a : arrows) r.arrows.push_back(Arrow{a.name, a.to, a.from});
    return r;
}

std::string Path::label(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices[source];
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[arrows[i]].name;
    }
    return s;
}

Relation parse_relation(const Quiver& q, const std::string& text) {
    Relation rel;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    long long sign = 1;
    skip_ws();
    if (pos >= text.size()) throw BadRelation("empty relation");
    while (pos < text.size()) {
        skip_ws();
        if (text[pos] == '+') {
            sign = 1;
            ++pos;
            skip_ws();
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
            skip_ws();
        }
        RelationTerm term;
        term.coeff = sign;
        bool saw_arrow = false;
        bool first_factor = true;
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size() || text[pos] == '+' || text[pos] == '-') break;
            if (!first_factor) {
                if (text[pos] != '*') throw BadRelation("expected '*' in '" + text + "'");
                ++pos;
                skip_ws();
            }
            size_t start = pos;
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                term.coeff *= std::stoll(text.substr(start, pos - start));
            } else if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                term.arrows.push_back(q.arrow_index(text.substr(start, pos - start)));
                saw_arrow = true;
            } else {
                throw BadRelation("unexpected character in '" + text + "'");
            }
            first_factor = false;
        }
        if (!saw_arrow) throw BadRelation("relation term without a path in '" + text + "'");
        rel.push_back(std::move(term));
        sign = 1;
    }
    // Composability and common endpoints.
    int src = -1, tgt = -1;
    for (const auto& term : rel) {
        for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
            if (q.arrows[term.arrows[i]].to != q.arrows[term.arrows[i + 1]].from)
                throw BadRelation("non-composable path in '" + text + "'");
        int s = q.arrows[term.arrows.front()].from;
        int t = q.arrows[term.arrows.back()].to;
        if (src < 0) {
            src = s;
            tgt = t;
        } else if (s != src || t != tgt) {
            throw BadRelation("relation mixes sources/targets: '" + text + "'");
        }
    }
    return rel;
}

namespace {

struct PathKey {
    int source;
    std::vector<int> arrows;
    bool operator<(const PathKey& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
};

constexpr int kMaxPaths = 20000;

}  // namespace

AlgebraPtr Algebra::from_quiver(Quiver quiver, const std::vector<std::string>& relation_texts,
                                Field field, int length_bound) {
    if (quiver.vertices.empty()) throw InvalidInput("quiver needs at least one vertex");
    {
        std::set<std::string> vs(quiver.vertices.begin(), quiver.vertices.end());
        if (vs.size() != quiver.vertices.size()) throw InvalidInput("duplicate vertex labels");
        std::set<std::string> as;
        for (const auto& a : quiver.arrows) {
            if (!as.insert(a.name).second) throw InvalidInput("duplicate arrow name '" + a.name + "'");
            if (a.from < 0 || a.from >= static_cast<int>(quiver.vertices.size()) || a.to < 0 ||
                a.to >= static_cast<int>(quiver.vertices.size()))
                throw InvalidInput("arrow endpoints out of range");
        }
    }
    if (length_bound < 1) throw InvalidInput("length_bound must be >= 1");

    std::vector<Relation> relations;
    for (const auto& text : relation_texts) relations.push_back(parse_relation(quiver, text));

    // All paths of length <= length_bound, sorted by (length, source, arrows).
    std::vector<Path> paths;
    for (int v = 0; v < static_cast<int>(quiver.vertices.size()); ++v)
        paths.push_back(Path{v, v, {}});
    size_t level_begin = 0;
    for (int len = 1; len <= length_bound; ++len) {
        size_t level_end = paths.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (size_t a = 0; a < quiver.arrows.size(); ++a) {
                if (quiver.arrows[a].from != paths[i].target) continue;
                Path p = paths[i];
                p.arrows.push_back(static_cast<int>(a));
                p.target = quiver.arrows[a].to;
                paths.push_back(std::move(p));
                if (paths.size() > kMaxPaths)
                    throw NotFiniteDimensional("path closure exceeds " + std::to_string(kMaxPaths) +
                                               " paths at length " + std::to_string(len));
            }
        level_begin = level_end;
    }
    int npaths = static_cast<int>(paths.size());
    std::map<PathKey, int> path_index;
    for (int i = 0; i < npaths; ++i) path_index[PathKey{paths[i].source, paths[i].arrows}] = i;

    // Column order: longest paths first, so surviving (non-pivot) coordinates
    // prefer short paths.
    std::vector<int> by_desc(npaths);
    for (int i = 0; i < npaths; ++i) by_desc[i] = npaths - 1 - i;
    auto col_of_path = [&](int path_idx) { return npaths - 1 - path_idx; };

    // Ideal span: u * r * v for every relation r and composable u, v.
    std::vector<std::vector<std::pair<int, long long>>> ideal_rows;
    for (const auto& rel : relations) {
        int rel_src = quiver.arrows[rel.front().arrows.front()].from;
        int rel_tgt = quiver.arrows[rel.front().arrows.back()].to;
        int rel_len_min = length_bound + 1;
        for (const auto& term : rel) rel_len_min = std::min(rel_len_min, static_cast<int>(term.arrows.size()));
        for (const auto& u : paths) {
            if (u.target != rel_src) continue;
            for (const auto& v : paths) {
                if (v.source != rel_tgt) continue;
                std::vector<std::pair<int, long long>> row;
                bool fits = true;
                for (const auto& term : rel) {
                    int total = u.length() + static_cast<int>(term.arrows.size()) + v.length();
                    if (total > length_bound) {
                        fits = false;
                        break;
                    }
                    PathKey k;
                    k.source = u.source;
                    k.arrows = u.arrows;
                    k.arrows.insert(k.arrows.end(), term.arrows.begin(), term.arrows.end());
                    k.arrows.insert(k.arrows.end(), v.arrows.begin(), v.arrows.end());
                    row.emplace_back(path_index.at(k), term.coeff);
                }
                if (fits && !row.empty()) ideal_rows.push_back(std::move(row));
            }
        }
    }

    Matrix ideal(field, static_cast<int>(ideal_rows.size()), npaths);
    for (size_t r = 0; r < ideal_rows.size(); ++r)
        for (const auto& [pidx, coeff] : ideal_rows[r]) {
            Scalar cur = ideal.at(static_cast<int>(r), col_of_path(pidx));
            ideal.set(static_cast<int>(r), col_of_path(pidx), cur + Scalar::from_int(field, coeff));
        }
    auto rr = ideal.rref();
    std::vector<bool> dead(npaths, false);
    for (int c : rr.pivots) dead[npaths - 1 - c] = true;  // pivot columns are dead paths

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->field_ = field;
    alg->quiver_ = quiver;
    alg->relation_texts_ = relation_texts;
    alg->length_bound_ = length_bound;
    std::vector<int> basis_path_idx;
    int max_len = 0;
    for (int i = 0; i < npaths; ++i)
        if (!dead[i]) {
            basis_path_idx.push_back(i);
            alg->basis_.push_back(paths[i]);
            max_len = std::max(max_len, paths[i].length());
        }
    if (max_len >= length_bound)
        throw NotFiniteDimensional("basis paths still appear at length " + std::to_string(max_len) +
                                   " = length_bound; raise length_bound or add relations");
    if (2 * max_len > length_bound)
        throw NotFiniteDimensional("cannot certify closure: products reach length " +
                                   std::to_string(2 * max_len) + " > length_bound");

    int dim = alg->dim();
    // Reduce an arbitrary path-space row to surviving coordinates.
    Matrix reduced = rr.reduced;
    auto reduce_row = [&](Matrix row_desc) {
        for (int r = 0; r < rr.rank; ++r) {
            Scalar c = row_desc.at(0, rr.pivots[r]);
            if (!c.is_zero()) row_desc = row_desc - reduced.row(r).scaled(c);
        }
        Matrix out(field, 1, dim);
        for (int t = 0; t < dim; ++t) out.set(0, t, row_desc.at(0, col_of_path(basis_path_idx[t])));
        return out;
    };
    auto reduce_path = [&](const PathKey& k) {
        Matrix row(field, 1, npaths);
        row.set_int(0, col_of_path(path_index.at(k)), 1);
        return reduce_row(std::move(row));
    };

    alg->table_.assign(dim, std::vector<Matrix>(dim, Matrix(field, 1, dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Path& pi = alg->basis_[i];
            const Path& pj = alg->basis_[j];
            if (pi.target != pj.source) continue;  // product is zero
            PathKey k;
            k.source = pi.source;
            k.arrows = pi.arrows;
            k.arrows.insert(k.arrows.end(), pj.arrows.begin(), pj.arrows.end());
            alg->table_[i][j] = reduce_path(k);
        }

    for (int i = 0; i < dim; ++i)
        if (alg->basis_[i].length() > 0) alg->radical_indices_.push_back(i);

    for (int v = 0; v < alg->num_vertices(); ++v) alg->generator_coords_.push_back(alg->basis_coords(v));
    for (size_t a = 0; a < quiver.arrows.size(); ++a) {
        PathKey k;
        k.source = quiver.arrows[a].from;
        k.arrows = {static_cast<int>(a)};
        alg->generator_coords_.push_back(reduce_path(k));
    }

    alg->finalize_and_validate();
    return alg;
}

void Algebra::finalize_and_validate() {
    int dim = this->dim();
    int nv = num_vertices();
    // Trivial paths are orthogonal idempotents summing to the identity.
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            Matrix expect(field_, 1, dim);
            if (i == j) expect.set_int(0, i, 1);
            if (table_[i][j] != expect) throw InvalidInput("vertex idempotents are not orthogonal");
        }
    // Associativity on all basis triples.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Matrix left = mult(table_[i][j], basis_coords(k));
                Matrix right = mult(basis_coords(i), table_[j][k]);
                if (left != right)
                    throw InvalidInput("structure constants are not associative at (" + std::to_string(i) +
                                       "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    // Unit acts as identity.
    Matrix unit = unit_coords();
    for (int i = 0; i < dim; ++i) {
        if (mult(unit, basis_coords(i)) != basis_coords(i) || mult(basis_coords(i), unit) != basis_coords(i))
            throw InvalidInput("unit decomposition does not act as identity");
    }
    // The span of positive-length paths must be nilpotent (admissibility).
    std::vector<Matrix> layer;
    for (int i : radical_indices_) layer.push_back(basis_coords(i));
    for (int iter = 0; iter <= dim + 1 && !layer.empty(); ++iter) {
        if (iter == dim + 1) throw BadRelation("relation ideal is not admissible: arrow span is not nilpotent");
        exactla::RowSpan span(field_, dim);
        std::vector<Matrix> next;
        for (const auto& x : layer)
            for (int j : radical_indices_) {
                Matrix prod = mult(x, basis_coords(j));
                if (span.add_row(prod)) next.push_back(prod);
            }
        if (next.size() >= layer.size() && !next.empty())
            throw BadRelation("relation ideal is not admissible: arrow span is not nilpotent");
        layer = std::move(next);
    }
}

Matrix Algebra::mult(const Matrix& x, const Matrix& y) const {
    Matrix out(field_, 1, dim());
    for (int i = 0; i < dim(); ++i) {
        Scalar xi = x.at(0, i);
        if (xi.is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            Scalar yj = y.at(0, j);
            if (yj.is_zero()) continue;
            out = out + table_[i][j].scaled(xi * yj);
        }
    }
    return out;
}

Matrix Algebra::unit_coords() const {
    Matrix u(field_, 1, dim());
    for (int v = 0; v < num_vertices(); ++v) u.set_int(0, v, 1);
    return u;
}

Matrix Algebra::basis_coords(int i) const {
    Matrix c(field_, 1, dim());
    c.set_int(0, i, 1);
    return c;
}

AlgebraPtr Algebra::opposite() const {
    auto op = std::shared_ptr<Algebra>(new Algebra());
    op->field_ = field_;
    op->quiver_ = quiver_.reversed();
    for (const auto& text : relation_texts_) op->relation_texts_.push_back("op(" + text + ")");
    op->length_bound_ = length_bound_;
    for (const auto& p : basis_) {
        Path rp;
        rp.source = p.target;
        rp.target = p.source;
        rp.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
        op->basis_.push_back(rp);
    }
    int dim = this->dim();
    op->table_.assign(dim, std::vector<Matrix>(dim, Matrix(field_, 1, dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) op->table_[i][j] = table_[j][i];
    op->radical_indices_ = radical_indices_;
    for (int v = 0; v < num_vertices(); ++v) op->generator_coords_.push_back(op->basis_coords(v));
    for (size_t a = 0; a < quiver_.arrows.size(); ++a)
        op->generator_coords_.push_back(generator_coords_[num_vertices() + a]);
    op->finalize_and_validate();
    return op;
}

bool Algebra::same_presentation(const Algebra& o) const {
    if (!(field_ == o.field_) || quiver_.vertices != o.quiver_.vertices) return false;
    if (quiver_.arrows.size() != o.quiver_.arrows.size()) return false;
    for (size_t i = 0; i < quiver_.arrows.size(); ++i) {
        const auto &a = quiver_.arrows[i], &b = o.quiver_.arrows[i];
        if (a.name != b.name || a.from != b.from || a.to != b.to) return false;
    }
    return relation_texts_ == o.relation_texts_;
}

}  // namespace specsupp::algmod
