#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "caspo/rng.hpp"
#include "caspo/vocab.hpp"

namespace caspo {

// Fixed-window autoregressive LM: the last `context` token embeddings are
// concatenated, passed through one tanh hidden layer and projected to
// vocabulary logits. Small enough that all gradients are written by hand.
struct LmDims {
    int vocab = 19;
    int context = 8;
    int embed = 16;
    int hidden = 64;
};

class ModelParams {
public:
    explicit ModelParams(const LmDims& dims);  // zero-initialized

    // Uniform init in [-0.1, 0.1] from the seeded generator.
    static ModelParams random_init(const LmDims& dims, std::uint64_t seed);

    const LmDims& dims() const { return dims_; }
    std::size_t param_count() const { return theta_.size(); }

    // Flattened read/write view of all parameters.
    std::span<double> param_vector() { return theta_; }
    std::span<const double> param_vector() const { return theta_; }

    // Layout offsets into the flat vector.
    std::size_t embed_offset() const { return 0; }
    std::size_t w1_offset() const;
    std::size_t b1_offset() const;
    std::size_t w2_offset() const;
    std::size_t b2_offset() const;

    bool operator==(const ModelParams& other) const = default;

private:
    LmDims dims_;
    std::vector<double> theta_;
};

// Frozen copy of the policy serving as the DPO reference for one iteration.
struct PolicySnapshot {
    ModelParams params;
    int iteration_index = 0;
};

inline PolicySnapshot make_snapshot(const ModelParams& params, int iteration_index) {
    return PolicySnapshot{params, iteration_index};
}

// Probability vector over the vocabulary for one next-token position.
struct TokenDistribution {
    std::vector<double> probs;
};

// Next-token logits for the last `context` tokens of ctx (left-padded with
// PAD when shorter). Deterministic; throws ValidationError on bad token ids.
std::vector<double> logits(const ModelParams& params, std::span<const TokenId> ctx);

// softmax(logits / temperature); temperature must be > 0.
TokenDistribution next_token_dist(const ModelParams& params, std::span<const TokenId> ctx,
                                  double temperature);

// Sum of per-token log probabilities of `continuation` given `ctx`.
// Empty continuation -> 0. No length normalization.
double sequence_logprob(const ModelParams& params, std::span<const TokenId> ctx,
                        std::span<const TokenId> continuation);

// Exact analytic gradient of sequence_logprob w.r.t. the flat parameter
// vector. Empty continuation -> zero vector.
std::vector<double> grad_logprob(const ModelParams& params, std::span<const TokenId> ctx,
                                 std::span<const TokenId> continuation);

// Autoregressive sampling until a stop token (included in the output) or
// max_len. PAD is masked to -inf and never sampled. temperature == 0 is the
// greedy argmax chain.
TokenSeq sample(const ModelParams& params, std::span<const TokenId> ctx, double temperature,
                Rng& rng, int max_len, std::span<const TokenId> stop_tokens);

struct SftExample {
    TokenSeq context;
    TokenSeq target;
};

struct SftConfig {
    double lr = 1e-2;
    int epochs = 10;
    int batch = 16;
    std::uint64_t seed = 0;
    // Absolute index of the first epoch; lets a resumed run consume the
    // same shuffle streams as an uninterrupted one.
    int epoch_offset = 0;
};

struct SftResult {
    ModelParams params;
    std::vector<double> epoch_loss;  // mean per-token cross-entropy
};

// Mini-batch gradient descent on cross-entropy of the targets.
SftResult sft_train(ModelParams params, const std::vector<SftExample>& data,
                    const SftConfig& config);

// Checkpoint file: "CASPO1" magic, dims + seed header, parameter array as
// little-endian 64-bit floats. Round-trips bit-exactly.
void save_checkpoint(const ModelParams& params, const std::filesystem::path& path,
                     std::uint64_t seed);

struct Checkpoint {
    ModelParams params;
    std::uint64_t seed = 0;
};

Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace caspo
