#include "piles/decompose.hpp"

#include <algorithm>

namespace piles {

std::string DecompChain::to_string() const {
    std::string out;
    for (const DecompStep& step : steps) {
        if (!out.empty()) out += '\n';
        out += '(' + std::to_string(step.l) + ';';
        for (std::uint8_t b : step.u) out += static_cast<char>('0' + b);
        out += ';' + std::to_string(step.m) + ')';
    }
    return out;
}

DecompStepResult decompose_step(const ReducedForm& r) {
    if (auto check = check_reduced_form(r.entries, r.width()); !check)
        throw NotAReducedForm(check.reason);

    DecompStepResult result;
    std::size_t l = 0;
    while (r.entries[l] != 0) ++l;  // a zero exists, so this terminates
    result.step.l = static_cast<long long>(l);
    result.step.u.assign(r.entries.begin() + static_cast<long long>(l) + 1, r.entries.end());

    if (l == 0) {
        result.step.m = 0;
        return result;
    }
    long long m = r.entries[0];
    for (std::size_t i = 1; i < l; ++i) m = std::min(m, r.entries[i]);
    result.step.m = m;
    ReducedForm residual;
    residual.entries.resize(l);
    for (std::size_t i = 0; i < l; ++i) residual.entries[i] = r.entries[i] - m;
    result.residual = std::move(residual);
    return result;
}

ReducedForm recompose_step(const DecompStep& step,
                           const std::optional<ReducedForm>& residual, long long w) {
    const long long l = step.l;
    if (l < 0 || l > w || static_cast<long long>(step.u.size()) != w - l)
        throw InconsistentStep("u length must be w - l");
    for (std::uint8_t b : step.u)
        if (b > 1) throw InconsistentStep("u entries must be 0 or 1");

    ReducedForm r;
    r.entries.assign(static_cast<std::size_t>(w) + 1, 0);
    if (l == 0) {
        if (step.m != 0 || residual.has_value())
            throw InconsistentStep("l = 0 steps carry no prefix");
    } else {
        if (step.m < 1) throw InconsistentStep("m must be >= 1 when l >= 1");
        if (!residual.has_value() || residual->width() != l - 1)
            throw InconsistentStep("residual must have width l - 1");
        if (auto check = check_reduced_form(residual->entries, l - 1); !check)
            throw InconsistentStep("residual is not a reduced form: " + check.reason);
        for (long long i = 0; i < l; ++i)
            r.entries[static_cast<std::size_t>(i)] =
                residual->entries[static_cast<std::size_t>(i)] + step.m;
    }
    for (std::size_t i = 0; i < step.u.size(); ++i)
        r.entries[static_cast<std::size_t>(l) + 1 + i] = step.u[i];
    return r;
}

DecompChain decompose_full(const ReducedForm& r) {
    DecompChain chain;
    chain.top_width = r.width();
    ReducedForm current = r;
    for (;;) {
        DecompStepResult step = decompose_step(current);
        chain.steps.push_back(std::move(step.step));
        if (!step.residual.has_value()) break;
        current = std::move(*step.residual);
    }
    return chain;
}

ReducedForm recompose_full(const DecompChain& chain) {
    if (chain.steps.empty()) throw InconsistentStep("empty chain");
    std::optional<ReducedForm> acc;
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        const long long w = it->l + static_cast<long long>(it->u.size());
        acc = recompose_step(*it, acc, w);
    }
    if (acc->width() != chain.top_width)
        throw InconsistentStep("chain does not reach the declared top width");
    return *acc;
}

}  // namespace piles
