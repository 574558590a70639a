#include "dycklab/insertion.hpp"

#include "dycklab/text.hpp"

#include <algorithm>
#include <sstream>

namespace dycklab {

std::size_t DyckTableau::cell_count() const {
    std::size_t total = 0;
    for (const IntSeq& row : rows) total += row.size();
    return total;
}

std::vector<int> DyckTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const IntSeq& row : rows) s.push_back(static_cast<int>(row.size()));
    return s;
}

bool is_valid_tableau(const DyckTableau& t) {
    for (std::size_t j = 0; j < t.rows.size(); ++j) {
        const IntSeq& row = t.rows[j];
        if (row.empty()) return false;
        if (!is_dual(row)) return false;
        if (j + 1 < t.rows.size()) {
            const IntSeq& below = t.rows[j + 1];
            if (row.size() < below.size()) return false;
            for (std::size_t p = 0; p < below.size(); ++p)
                if (row[p] > below[p] + 1) return false;
        }
    }
    return true;
}

IntSeq row_reading_word(const DyckTableau& t) {
    IntSeq word;
    word.reserve(t.cell_count());
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

std::vector<int> RecordingTableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
    return s;
}

long long RecordingTableau::content(int i) const {
    long long count = 0;
    for (const auto& row : rows)
        for (int label : row)
            if (label == i) ++count;
    return count;
}

bool is_semistandard(const RecordingTableau& q) {
    for (std::size_t j = 0; j < q.rows.size(); ++j) {
        const auto& row = q.rows[j];
        if (row.empty()) return false;
        for (std::size_t p = 0; p + 1 < row.size(); ++p)
            if (row[p] > row[p + 1]) return false;
        if (j + 1 < q.rows.size()) {
            const auto& below = q.rows[j + 1];
            if (row.size() < below.size()) return false;
            for (std::size_t p = 0; p < below.size(); ++p)
                if (row[p] >= below[p]) return false;
        }
    }
    return true;
}

int max_chain(const IntSeq& s, int p, ChainDirection direction) {
    const int n = static_cast<int>(s.size());
    if (p < 0 || p >= n) throw std::domain_error("max_chain: index out of range");
    int length = 1;
    if (direction == ChainDirection::Start) {
        while (p + length < n && s[p + length] == s[p + length - 1] + 2) ++length;
    } else {
        while (p - length >= 0 && s[p - length] == s[p - length + 1] - 2) ++length;
    }
    return length;
}

bool RowsertTrace::case0_used() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const RowsertStep& st) { return st.case_tag == 0; });
}

std::vector<int> RowsertTrace::alphas_in_written_order(bool reverse_processing) const {
    std::vector<int> out;
    if (!reverse_processing) {
        for (const RowsertStep& st : steps)
            out.insert(out.end(), st.alpha_twice.begin(), st.alpha_twice.end());
    } else {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            out.insert(out.end(), it->alpha_twice.begin(), it->alpha_twice.end());
    }
    return out;
}

namespace {

int chain_from_front(const IntSeq& s) {
    int length = 1;
    const int n = static_cast<int>(s.size());
    while (length < n && s[length] == s[length - 1] + 2) ++length;
    return length;
}

int chain_to_back(const IntSeq& s) {
    int length = 1;
    const int n = static_cast<int>(s.size());
    while (length < n && s[n - 1 - length] == s[n - length] - 2) ++length;
    return length;
}

void require_dual(const IntSeq& s, const char* what) {
    if (!is_dual(s))
        throw std::domain_error(std::string(what) + " must be dual Dyck: " + seq_to_string(s));
}

}  // namespace

RowsertResult rowsert(const IntSeq& row0, const IntSeq& input0, RowsertTrace* trace) {
    require_dual(row0, "rowsert row");
    require_dual(input0, "rowsert input");
    IntSeq evicted;
    IntSeq row(row0);
    IntSeq input(input0);
    while (!input.empty()) {
        const int a = input.front();
        int i = -1;
        for (int k = 0; k < static_cast<int>(row.size()); ++k) {
            if (a <= row[k] + 1) {
                i = k;
                break;
            }
        }
        RowsertStep step;
        if (i < 0) {
            step.case_tag = 0;
            row.push_back(a);
            input.erase(input.begin());
        } else if (a <= row[i]) {
            step.case_tag = 1;
            step.comparison_index = i;
            step.alpha_twice = {2 * i};
            evicted.push_back(row[i]);
            row[i] = a;
            input.erase(input.begin());
        } else {
            const int j = max_chain(row, i, ChainDirection::Start);
            const int k = chain_from_front(input);
            if (j <= k) {
                step.case_tag = 2;
                step.comparison_index = i;
                for (int h = 0; h < j; ++h) {
                    step.alpha_twice.push_back(2 * (i + h));
                    evicted.push_back(row[i + h]);
                    row[i + h] = input[h];
                }
                input.erase(input.begin(), input.begin() + j);
            } else {
                step.case_tag = 3;
                step.comparison_index = i;
                for (int h = 0; h < k; ++h) {
                    step.alpha_twice.push_back(2 * (i + h) + 1);
                    evicted.push_back(input[h]);
                }
                input.erase(input.begin(), input.begin() + k);
            }
        }
        if (trace) trace->steps.push_back(std::move(step));
    }
    return RowsertResult{std::move(evicted), std::move(row)};
}

WorsertResult worsert(const IntSeq& evicted0, const IntSeq& row0, RowsertTrace* trace) {
    require_dual(evicted0, "worsert input");
    require_dual(row0, "worsert row");
    IntSeq evicted(evicted0);
    IntSeq row(row0);
    IntSeq output;
    while (!evicted.empty()) {
        const int b = evicted.back();
        int i = -1;
        for (int k = static_cast<int>(row.size()) - 1; k >= 0; --k) {
            if (b >= row[k] - 1) {
                i = k;
                break;
            }
        }
        RowsertStep step;
        if (i < 0) {
            step.case_tag = 0;
            row.insert(row.begin(), b);
            evicted.pop_back();
        } else if (b >= row[i]) {
            step.case_tag = 1;
            step.comparison_index = i;
            step.alpha_twice = {2 * i};
            output.insert(output.begin(), row[i]);
            row[i] = b;
            evicted.pop_back();
        } else {
            const int j = max_chain(row, i, ChainDirection::End);
            const int k = chain_to_back(evicted);
            const int e = static_cast<int>(evicted.size());
            if (j <= k) {
                step.case_tag = 2;
                step.comparison_index = i;
                IntSeq old_segment(row.begin() + (i - j + 1), row.begin() + (i + 1));
                for (int h = 0; h < j; ++h) {
                    step.alpha_twice.push_back(2 * (i - j + 1 + h));
                    row[i - j + 1 + h] = evicted[e - j + h];
                }
                evicted.erase(evicted.end() - j, evicted.end());
                output.insert(output.begin(), old_segment.begin(), old_segment.end());
            } else {
                step.case_tag = 3;
                step.comparison_index = i;
                IntSeq block(evicted.end() - k, evicted.end());
                for (int h = 0; h < k; ++h) step.alpha_twice.push_back(2 * (i - k + h) + 1);
                evicted.erase(evicted.end() - k, evicted.end());
                output.insert(output.begin(), block.begin(), block.end());
            }
        }
        if (trace) trace->steps.push_back(std::move(step));
    }
    return WorsertResult{std::move(row), std::move(output)};
}

DyckTableau tabsert(const DyckTableau& t, const IntSeq& factor) {
    if (!is_valid_tableau(t)) throw std::domain_error("tabsert: invalid Dyck tableau");
    require_dual(factor, "tabsert factor");
    DyckTableau out(t);
    if (factor.empty()) return out;
    if (out.rows.empty()) {
        out.rows.push_back(factor);
        return out;
    }
    IntSeq carried(factor);
    for (std::size_t j = 0; j < out.rows.size(); ++j) {
        if (carried.empty()) return out;
        RowsertResult r = rowsert(out.rows[j], carried);
        out.rows[j] = std::move(r.row);
        carried = std::move(r.evicted);
    }
    if (!carried.empty()) out.rows.push_back(std::move(carried));
    return out;
}

void DualFactorization::normalize() {
    while (!factors.empty() && factors.back().empty()) factors.pop_back();
}

IntSeq DualFactorization::concatenation() const {
    IntSeq word;
    for (const IntSeq& f : factors) word.insert(word.end(), f.begin(), f.end());
    return word;
}

long long DualFactorization::di_value() const { return di(concatenation()); }

std::pair<DyckTableau, RecordingTableau> insert_factorization(const DualFactorization& f) {
    DyckTableau p;
    RecordingTableau q;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        const std::vector<int> before = p.shape();
        p = tabsert(p, f.factors[i]);
        const std::vector<int> after = p.shape();
        for (std::size_t r = 0; r < after.size(); ++r) {
            const int old_len = r < before.size() ? before[r] : 0;
            if (r >= q.rows.size()) q.rows.emplace_back();
            for (int c = old_len; c < after[r]; ++c) q.rows[r].push_back(static_cast<int>(i));
        }
    }
    return {std::move(p), std::move(q)};
}

namespace {

std::string state_repr(const DyckTableau& p, const IntSeq& carried, int label, int row) {
    std::ostringstream os;
    os << " [label " << label << ", row " << row << ", carried " << seq_to_string(carried)
       << ", rows " << rows_to_string(p.rows) << "]";
    return os.str();
}

}  // namespace

DualFactorization extract_factorization(const DyckTableau& p0, const RecordingTableau& q) {
    if (!is_valid_tableau(p0)) throw std::domain_error("extract_factorization: invalid Dyck tableau");
    if (p0.shape() != q.shape())
        throw std::domain_error("extract_factorization: tableau shapes do not match");
    if (!q.rows.empty() && !is_semistandard(q))
        throw std::domain_error("extract_factorization: recording tableau is not semistandard");

    int max_label = -1;
    for (const auto& row : q.rows)
        for (int label : row) max_label = std::max(max_label, label);

    DyckTableau p(p0);
    DualFactorization result;
    result.factors.assign(static_cast<std::size_t>(max_label + 1), IntSeq{});

    for (int label = max_label; label >= 0; --label) {
        // Cells labelled `label` form the terminal suffix of each current row
        // (labels above `label` have already been peeled away).
        std::vector<int> peel(p.rows.size(), 0);
        for (std::size_t r = 0; r < p.rows.size() && r < q.rows.size(); ++r) {
            const auto& qrow = q.rows[r];
            int live = static_cast<int>(p.rows[r].size());
            int count = 0;
            while (count < live && qrow[live - 1 - count] == label) ++count;
            peel[r] = count;
        }
        IntSeq carried;
        for (int r = static_cast<int>(p.rows.size()) - 1; r >= 0; --r) {
            IntSeq& row = p.rows[r];
            const int keep = static_cast<int>(row.size()) - peel[r];
            IntSeq suffix(row.begin() + keep, row.end());
            IntSeq truncated(row.begin(), row.begin() + keep);
            RowsertTrace trace;
            WorsertResult w = worsert(carried, truncated, &trace);
            if (trace.case0_used())
                throw ReverseInsertionError(
                    "reverse row pass triggered Case 0" + state_repr(p, carried, label, r));
            row = std::move(w.row);
            carried = std::move(w.output);
            carried.insert(carried.end(), suffix.begin(), suffix.end());
            if (!is_dual(carried))
                throw ReverseInsertionError(
                    "reverse row pass did not restore a dual Dyck carried sequence" +
                    state_repr(p, carried, label, r));
        }
        while (!p.rows.empty() && p.rows.back().empty()) p.rows.pop_back();
        // Remove emptied label suffixes from q's shape bookkeeping implicitly:
        // subsequent labels only read q rows up to the current p rows.
        if (!p.rows.empty() && !is_valid_tableau(p))
            throw ReverseInsertionError(
                "reverse row pass did not restore a valid two-row window" +
                state_repr(p, carried, label, -1));
        result.factors[static_cast<std::size_t>(label)] = std::move(carried);
    }
    if (!p.rows.empty())
        throw ReverseInsertionError("reverse peeling left unlabelled cells behind");
    result.normalize();
    return result;
}

}  // namespace dycklab
