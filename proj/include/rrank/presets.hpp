#pragma once
// Frozen training presets for the five ensemble members. model1 is the
// JPoSE-style run (relevance margin on cross-modal and within-modality
// directions, SGD); model2..model5 are the RANP runs (cross-modal, Adam)
// differing in pool threshold, positive margin, and embedding size.

#include <stdexcept>
#include <string>
#include <vector>

#include "rrank/trainer.hpp"

namespace rrank {

struct Preset {
    std::string name;
    std::string description;
    TrainConfig config;
};

inline const std::vector<Preset>& model_presets() {
    static const std::vector<Preset> presets = [] {
        std::vector<Preset> out;

        TrainConfig m1;
        m1.loss.variant = LossVariant::RelevanceMargin;
        m1.directions = {1.0, 1.0, 1.0, 1.0};
        m1.optimizer = SgdConfig{0.01, 0.9};
        m1.epochs = 100;
        m1.batch_size = 64;
        out.push_back({"model1",
                       "relevance-margin triplet loss on all four directions, "
                       "SGD(lr 0.01, momentum 0.9), 100 epochs, batch 64",
                       m1});

        TrainConfig m2;
        m2.loss.variant = LossVariant::Ranp;
        m2.loss.tau = 0.15;
        m2.loss.margin_pos = 0.2;
        m2.optimizer = AdamConfig{1e-4, 0.9, 0.999, 1e-8};
        m2.epochs = 50;
        m2.batch_size = 64;
        out.push_back({"model2",
                       "RANP (tau 0.15, margin_pos 0.2), Adam(lr 1e-4), 50 epochs, batch 64",
                       m2});

        TrainConfig m3 = m2;
        m3.embedding_dim = 512;
        out.push_back({"model3",
                       "RANP (tau 0.15, margin_pos 0.2) with a 512-dim embedding space, "
                       "Adam(lr 1e-4), 50 epochs, batch 64",
                       m3});

        TrainConfig m4 = m2;
        m4.loss.tau = 0.4;
        m4.loss.margin_pos = 0.25;
        out.push_back({"model4",
                       "RANP (tau 0.4, margin_pos 0.25), Adam(lr 1e-4), 50 epochs, batch 64",
                       m4});

        TrainConfig m5 = m2;
        m5.loss.tau = 0.4;
        m5.loss.margin_pos = 0.15;
        out.push_back({"model5",
                       "RANP (tau 0.4, margin_pos 0.15), Adam(lr 1e-4), 50 epochs, batch 64",
                       m5});
        return out;
    }();
    return presets;
}

inline const Preset& preset_by_name(const std::string& name) {
    for (const Preset& p : model_presets())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown preset '" + name + "' (expected model1..model5)");
}

}  // namespace rrank
