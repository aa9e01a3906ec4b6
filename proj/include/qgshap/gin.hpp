#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgshap/graph.hpp"
#include "qgshap/matrix.hpp"

namespace qgshap {

// Two-layer perceptron: relu(x W1 + b1) W2 + b2.
struct MlpParams {
    Matrix w1;
    std::vector<double> b1;
    Matrix w2;
    std::vector<double> b2;
};

enum class Readout { Sum, Mean };

struct GinLayer {
    MlpParams mlp;       // hidden -> hidden
    double epsilon = 0;  // fixed self-loop weight, not trained
};

// Graph classifier: encoder MLP, three GIN message-passing layers, decoder MLP
// to two class logits, permutation-invariant readout in between.
struct GinModel {
    MlpParams encoder;  // feature_dim -> hidden
    std::array<GinLayer, 3> gin_layers;
    MlpParams decoder;  // hidden -> 2
    int hidden_dim = 0;
    Readout readout = Readout::Sum;
};

// Gradient of the loss w.r.t. every trained parameter, same shapes as the model.
struct MlpGrads {
    Matrix w1;
    std::vector<double> b1;
    Matrix w2;
    std::vector<double> b2;
};

struct GinGradients {
    MlpGrads encoder;
    std::array<MlpGrads, 3> gin_layers;
    MlpGrads decoder;
};

struct TrainConfig {
    int epochs = 100;
    double learning_rate = 1e-3;
    std::pair<double, double> adam_betas = {0.9, 0.999};
    double adam_eps = 1e-8;
    std::uint64_t seed = 0;
    int hidden_dim = 128;
    Readout readout = Readout::Sum;
    double gin_epsilon = 0.0;
};

struct TrainResult {
    GinModel model;
    std::vector<double> loss_history;
    double final_loss = 0;
    double train_accuracy = 0;
    // 10-epoch windows where the loss failed to decrease (logged, not fatal).
    int non_monotone_windows = 0;
};

GinModel init_gin_model(int feature_dim, int hidden_dim, Readout readout, double gin_epsilon,
                        std::uint64_t seed);

// Class probabilities [p0, p1]; softmax over the decoder logits.
std::array<double, 2> forward(const GinModel& m, const Graph& g);

// Gradients of the cross-entropy loss -log p[label] w.r.t. all parameters.
GinGradients backward(const GinModel& m, const Graph& g, int label);

double loss_value(const GinModel& m, const Graph& g, int label);

// Full-batch Adam over the mean loss; throws on missing labels or divergence.
TrainResult train(const std::vector<Graph>& dataset, const TrainConfig& cfg);

double accuracy(const GinModel& m, const std::vector<Graph>& dataset);

void save_model(const GinModel& m, const std::string& path);
GinModel load_model(const std::string& path);

GinGradients zero_gradients(const GinModel& m);

// Flat views over every trained tensor in a fixed order (encoder, gin layers,
// decoder; within each MLP: w1, b1, w2, b2). Model and gradient views line up.
std::vector<std::span<double>> parameter_views(GinModel& m);
std::vector<std::span<double>> gradient_views(GinGradients& g);

}  // namespace qgshap
