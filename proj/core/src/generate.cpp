#include "piles/generate.hpp"

#include <algorithm>
#include <cassert>

namespace piles {

GenStats& GenStats::operator+=(const GenStats& other) {
    nodes += other.nodes;
    yields += other.yields;
    work += other.work;
    cells = std::max(cells, other.cells);
    return *this;
}

// ---------------------------------------------------------------------------
// Fixed-weight binary strings, revolving-door order (at most two bit flips
// per transition; the index scan below is O(1) amortized).

void FixedWeightGen::init(std::uint8_t* bits, long long* positions, long long length,
                          long long ones) {
    bits_ = bits;
    c_ = positions;
    length_ = length;
    ones_ = ones;
    all_ones_ = (ones == length && length > 0);
    steps += 1;
    if (ones <= 0 || all_ones_) return;  // single string, buffer untouched
    for (long long j = 1; j <= ones; ++j) {
        c_[j] = j - 1;
        bits_[j - 1] = 1;
    }
    c_[ones + 1] = length;
    steps += static_cast<std::uint64_t>(ones);
}

bool FixedWeightGen::next() {
    if (ones_ <= 0 || all_ones_) return false;
    steps += 1;
    if (ones_ & 1) {
        if (c_[1] + 1 < c_[2]) {
            bits_[c_[1]] = 0;
            bits_[c_[1] + 1] = 1;
            ++c_[1];
            return true;
        }
    } else {
        if (c_[1] > 0) {
            bits_[c_[1]] = 0;
            bits_[c_[1] - 1] = 1;
            --c_[1];
            return true;
        }
    }
    long long j = 2;
    bool try_decrease = (ones_ & 1);
    while (j <= ones_) {
        steps += 1;
        if (try_decrease) {
            if (c_[j] >= j) {
                bits_[c_[j]] = 0;
                bits_[j - 2] = 1;
                c_[j] = c_[j - 1];
                c_[j - 1] = j - 2;
                return true;
            }
            ++j;
            try_decrease = false;
        } else {
            if (c_[j] + 1 < c_[j + 1]) {
                bits_[c_[j - 1]] = 0;
                bits_[c_[j] + 1] = 1;
                c_[j - 1] = c_[j];
                c_[j] += 1;
                return true;
            }
            ++j;
            try_decrease = true;
        }
    }
    return false;
}

void FixedWeightGen::clear() {
    if (ones_ <= 0 || all_ones_) return;
    for (long long j = 1; j <= ones_; ++j) bits_[c_[j]] = 0;
    steps += static_cast<std::uint64_t>(ones_);
}

void gen_fixed_weight_binary(long long length, long long ones,
                             const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
    if (ones < 0 || ones > length) throw Error("ones must lie in [0, length]");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(length), 0);
    std::vector<long long> positions(static_cast<std::size_t>(ones) + 2, 0);
    FixedWeightGen gen;
    gen.init(bits.data(), positions.data(), length, ones);
    if (gen.all_ones()) std::fill(bits.begin(), bits.end(), 1);
    do {
        visit(bits);
    } while (gen.next());
}

// ---------------------------------------------------------------------------
// Shared materialization of the in-flight decomposition chain.

namespace {

ReducedForm materialize_chain(const GenStep* steps, long long depth,
                              const std::uint8_t* bits, long long w0) {
    ReducedForm r;
    r.entries.assign(static_cast<std::size_t>(w0) + 1, 0);
    long long acc = 0;
    long long floor_end = w0 + 1;
    for (long long f = 0; f < depth; ++f) {
        const GenStep& s = steps[f];
        r.entries[static_cast<std::size_t>(s.l)] = acc;
        for (long long j = 0; j < s.u_len; ++j)
            r.entries[static_cast<std::size_t>(s.u_off + j)] =
                (s.u_all_ones ? 1 : bits[s.u_off + j]) + acc;
        acc += s.m;
        floor_end = s.l;
    }
    for (long long pos = 0; pos < floor_end; ++pos)
        r.entries[static_cast<std::size_t>(pos)] = acc;
    return r;
}

DecompChain chain_of(const GenStep* steps, long long depth, const std::uint8_t* bits,
                     long long w0) {
    DecompChain chain;
    chain.top_width = w0;
    for (long long f = 0; f < depth; ++f) {
        const GenStep& s = steps[f];
        DecompStep step;
        step.l = s.l;
        step.m = s.m;
        step.u.resize(static_cast<std::size_t>(s.u_len));
        for (long long j = 0; j < s.u_len; ++j)
            step.u[static_cast<std::size_t>(j)] = s.u_all_ones ? 1 : bits[s.u_off + j];
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

}  // namespace

// ---------------------------------------------------------------------------
// Recursive traversal (the reference form of the generator).

namespace detail {

class GenEngine {
   public:
    GenEngine(long long w0, const ReducedVisitor& visit) : w0_(w0), visit_(visit) {
        bits_.assign(static_cast<std::size_t>(w0) + 2, 0);
        chain_.resize(static_cast<std::size_t>(w0) + 2);
        arena_.resize(static_cast<std::size_t>(3 * w0 + 8));
        stats_.cells = static_cast<std::uint64_t>(bits_.size()) +
                       static_cast<std::uint64_t>(chain_.size()) * 5 +
                       static_cast<std::uint64_t>(arena_.size());
    }

    void run(long long p, long long w, long long d, std::size_t arena_pos) {
        stats_.nodes += 1;
        stats_.work += 1;
        if (p == 0) {
            yield(d);
            return;
        }
        GenStep& step = chain_[static_cast<std::size_t>(d)];
        FixedWeightGen u;

        // l = 0: every grain is a dust grain right of the zero.
        if (p <= w) {
            step = {0, 0, 1, w, false};
            u.init(bits_.data() + 1, arena_.data() + arena_pos, w, p);
            step.u_all_ones = u.all_ones();
            do {
                yield(d + 1);
            } while (u.next());
            u.clear();
            flush(u);
        }

        // l = 1: the prefix is the single column m = p - i.
        for (long long i = 0; i <= std::min(w - 1, p - 1); ++i) {
            step = {1, p - i, 2, w - 1, false};
            u.init(bits_.data() + 2, arena_.data() + arena_pos, w - 1, i);
            step.u_all_ones = u.all_ones();
            do {
                yield(d + 1);
            } while (u.next());
            u.clear();
            flush(u);
        }

        // l >= 2: recurse on the prefix with m layers removed.
        for (long long l = 2; l <= std::min(w, p); ++l) {
            for (long long i = 0; i <= std::min(w - l, p - l); ++i) {
                step.l = l;
                step.u_off = l + 1;
                step.u_len = w - l;
                u.init(bits_.data() + l + 1, arena_.data() + arena_pos, w - l, i);
                step.u_all_ones = u.all_ones();
                const std::size_t child_arena = arena_pos + static_cast<std::size_t>(i) + 2;
                do {
                    const long long m_max = (p - i) / l;
                    for (long long m = 1; m <= m_max; ++m) {
                        chain_[static_cast<std::size_t>(d)].m = m;
                        stats_.work += 1;
                        run(p - i - l * m, l - 1, d + 1, child_arena);
                    }
                } while (u.next());
                u.clear();
                flush(u);
            }
        }
    }

    GenStats stats() const { return stats_; }

   private:
    friend class piles::GenView;

    void yield(long long depth) {
        stats_.yields += 1;
        stats_.work += 1;
        visit_(GenView(this, depth));
    }

    void flush(FixedWeightGen& u) {
        stats_.work += u.steps;
        u.steps = 0;
    }

    long long w0_;
    const ReducedVisitor& visit_;
    std::vector<std::uint8_t> bits_;
    std::vector<GenStep> chain_;
    std::vector<long long> arena_;
    GenStats stats_;
};

}  // namespace detail

long long GenView::fiber_width() const { return engine_->w0_; }

DecompChain GenView::chain() const {
    return chain_of(engine_->chain_.data(), depth_, engine_->bits_.data(), engine_->w0_);
}

ReducedForm GenView::reduced() const {
    return materialize_chain(engine_->chain_.data(), depth_, engine_->bits_.data(),
                             engine_->w0_);
}

Configuration GenView::configuration() const { return expand(reduced()); }

void generate_reduced(long long p, long long w, const ReducedVisitor& visit,
                      GenStats* stats) {
    if (p < 0 || w < 0) throw Error("generate_reduced needs p >= 0 and w >= 0");
    detail::GenEngine engine(w, visit);
    engine.run(p, w, 0, 0);
    if (stats) *stats += engine.stats();
}

void generate_spm_width(long long n, long long w, const ConfigurationVisitor& visit,
                        GenStats* stats) {
    if (w < 1 || w * (w + 1) > 2 * n)
        throw InvalidWidth("no configurations of weight " + std::to_string(n) +
                           " have staircase width " + std::to_string(w));
    generate_reduced(n - w * (w + 1) / 2, w,
                     [&](const GenView& view) { visit(view.configuration()); }, stats);
}

void generate_spm(long long n, const ConfigurationVisitor& visit, GenStats* stats) {
    if (n < 0) throw Error("negative grain count");
    if (n == 0) {
        visit(Configuration());
        if (stats) stats->yields += 1;
        return;
    }
    for (long long w = 1; w * (w + 1) <= 2 * n; ++w) generate_spm_width(n, w, visit, stats);
}

// ---------------------------------------------------------------------------
// Pull-based stream: explicit-stack encoding of the same traversal.

struct ReducedFormStream::Impl {
    enum class Stage { start, l0_resume, l1_resume, l2_child };

    struct Frame {
        long long p = 0;
        long long w = 0;
        Stage stage = Stage::start;
        long long l = 0;
        long long i = 0;
        long long m = 0;
        long long m_max = 0;
        FixedWeightGen u;
        std::size_t arena_pos = 0;
    };

    long long w0;
    std::vector<std::uint8_t> bits;
    std::vector<GenStep> chain;
    std::vector<long long> arena;
    std::vector<Frame> frames;
    long long yield_depth = 0;  // chain[0..yield_depth) is the current object
    GenStats stats;

    Impl(long long p, long long w) : w0(w) {
        bits.assign(static_cast<std::size_t>(w) + 2, 0);
        chain.resize(static_cast<std::size_t>(w) + 2);
        arena.resize(static_cast<std::size_t>(3 * w + 8));
        frames.reserve(static_cast<std::size_t>(w) + 2);
        frames.push_back(Frame{p, w, Stage::start, 0, 0, 0, 0, {}, 0});
        stats.cells = static_cast<std::uint64_t>(bits.size()) +
                      static_cast<std::uint64_t>(chain.size()) * 5 +
                      static_cast<std::uint64_t>(arena.size()) +
                      static_cast<std::uint64_t>(frames.capacity()) * 12;
    }

    GenStep& step_of(std::size_t frame_index) { return chain[frame_index]; }

    void flush(FixedWeightGen& u) {
        stats.work += u.steps;
        u.steps = 0;
    }

    // Enters the l = 0 case if it applies, else falls through to l = 1 / l >= 2.
    // Returns true when a yield happened.
    bool enter_cases(std::size_t fi) {
        Frame& f = frames[fi];
        GenStep& step = step_of(fi);
        if (f.p <= f.w) {
            step = {0, 0, 1, f.w, false};
            f.u.init(bits.data() + 1, arena.data() + f.arena_pos, f.w, f.p);
            step.u_all_ones = f.u.all_ones();
            f.stage = Stage::l0_resume;
            return yield_at(fi + 1);
        }
        return start_l1(fi);
    }

    bool start_l1(std::size_t fi) {
        Frame& f = frames[fi];
        f.i = 0;
        if (f.i > std::min(f.w - 1, f.p - 1)) return start_l2(fi);
        GenStep& step = step_of(fi);
        step = {1, f.p - f.i, 2, f.w - 1, false};
        f.u.init(bits.data() + 2, arena.data() + f.arena_pos, f.w - 1, f.i);
        step.u_all_ones = f.u.all_ones();
        f.stage = Stage::l1_resume;
        return yield_at(fi + 1);
    }

    bool start_l2(std::size_t fi) {
        Frame& f = frames[fi];
        f.l = 2;
        f.i = 0;
        if (f.l <= std::min(f.w, f.p)) return start_l2_u(fi);
        frames.pop_back();
        return false;
    }

    bool start_l2_u(std::size_t fi) {
        Frame& f = frames[fi];
        GenStep& step = step_of(fi);
        step.l = f.l;
        step.u_off = f.l + 1;
        step.u_len = f.w - f.l;
        f.u.init(bits.data() + f.l + 1, arena.data() + f.arena_pos, f.w - f.l, f.i);
        step.u_all_ones = f.u.all_ones();
        f.m = 1;
        f.m_max = (f.p - f.i) / f.l;
        return push_child(fi);
    }

    bool push_child(std::size_t fi) {
        Frame& f = frames[fi];
        step_of(fi).m = f.m;
        f.stage = Stage::l2_child;
        stats.work += 1;
        Frame child;
        child.p = f.p - f.i - f.l * f.m;
        child.w = f.l - 1;
        child.arena_pos = f.arena_pos + static_cast<std::size_t>(f.i) + 2;
        frames.push_back(child);
        return false;  // the child yields on its own turn
    }

    bool yield_at(long long depth) {
        yield_depth = depth;
        stats.yields += 1;
        stats.work += 1;
        return true;
    }

    // One scheduler turn on the top frame; true when a new object is current.
    bool turn() {
        const std::size_t fi = frames.size() - 1;
        Frame& f = frames[fi];
        switch (f.stage) {
            case Stage::start: {
                stats.nodes += 1;
                stats.work += 1;
                if (f.p == 0) {
                    const bool yielded = yield_at(static_cast<long long>(fi));
                    frames.pop_back();
                    return yielded;
                }
                return enter_cases(fi);
            }
            case Stage::l0_resume: {
                if (f.u.next()) return yield_at(fi + 1);
                f.u.clear();
                flush(f.u);
                return start_l1(fi);
            }
            case Stage::l1_resume: {
                if (f.u.next()) return yield_at(fi + 1);
                f.u.clear();
                flush(f.u);
                ++f.i;
                if (f.i <= std::min(f.w - 1, f.p - 1)) {
                    GenStep& step = step_of(fi);
                    step = {1, f.p - f.i, 2, f.w - 1, false};
                    f.u.init(bits.data() + 2, arena.data() + f.arena_pos, f.w - 1, f.i);
                    step.u_all_ones = f.u.all_ones();
                    return yield_at(fi + 1);
                }
                return start_l2(fi);
            }
            case Stage::l2_child: {
                // The child frame for (l, i, u, m) has been popped.
                ++f.m;
                if (f.m <= f.m_max) return push_child(fi);
                if (f.u.next()) {
                    f.m = 1;
                    return push_child(fi);
                }
                f.u.clear();
                flush(f.u);
                ++f.i;
                if (f.i <= std::min(f.w - f.l, f.p - f.l)) return start_l2_u(fi);
                ++f.l;
                f.i = 0;
                if (f.l <= std::min(f.w, f.p)) return start_l2_u(fi);
                frames.pop_back();
                return false;
            }
        }
        return false;
    }
};

ReducedFormStream::ReducedFormStream(long long p, long long w) {
    if (p < 0 || w < 0) throw Error("stream needs p >= 0 and w >= 0");
    impl_ = std::make_unique<Impl>(p, w);
}

ReducedFormStream::~ReducedFormStream() = default;
ReducedFormStream::ReducedFormStream(ReducedFormStream&&) noexcept = default;
ReducedFormStream& ReducedFormStream::operator=(ReducedFormStream&&) noexcept = default;

bool ReducedFormStream::advance() {
    while (!impl_->frames.empty())
        if (impl_->turn()) return true;
    return false;
}

ReducedForm ReducedFormStream::current() const {
    return materialize_chain(impl_->chain.data(), impl_->yield_depth, impl_->bits.data(),
                             impl_->w0);
}

Configuration ReducedFormStream::current_configuration() const { return expand(current()); }

const GenStats& ReducedFormStream::stats() const { return impl_->stats; }

SpmStream::SpmStream(long long n) : n_(n) {
    if (n < 0) throw Error("negative grain count");
}

bool SpmStream::advance() {
    if (n_ == 0) {
        if (empty_emitted_) return false;
        empty_emitted_ = true;
        current_ = Configuration();
        return true;
    }
    for (;;) {
        if (fiber_ && fiber_->advance()) {
            current_ = fiber_->current_configuration();
            return true;
        }
        ++w_;
        if (w_ * (w_ + 1) > 2 * n_) return false;
        fiber_ = std::make_unique<ReducedFormStream>(n_ - w_ * (w_ + 1) / 2, w_);
    }
}

}  // namespace piles
