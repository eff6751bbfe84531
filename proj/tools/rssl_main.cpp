// rssl: learn an outlier-robust patch subspace and use it to segment
// foreground from smooth background in still images.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rssl/decompose.hpp"
#include "rssl/errors.hpp"
#include "rssl/imageio.hpp"
#include "rssl/learner.hpp"
#include "rssl/metrics.hpp"
#include "rssl/model_io.hpp"
#include "rssl/operators.hpp"
#include "rssl/patching.hpp"
#include "rssl/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> list_images(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext == ".pgm" || ext == ".png") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

struct TrainArgs {
    std::string input_dir;
    size_t patch_size = 32;
    size_t stride = 5;
    size_t dim = 64;
    double lambda1 = 0.5, lambda2 = 1.0, lambda3 = 2.0;
    int iters = 50;
    std::string init = "dct";
    uint64_t seed = 0;
    std::string out = "model.rssl";
};

int cmd_train(const TrainArgs& args) {
    if (args.dim > args.patch_size * args.patch_size) {
        std::fprintf(stderr, "error: --dim exceeds patch_size^2\n");
        return kExitUsage;
    }
    const auto paths = list_images(args.input_dir);
    if (paths.empty()) {
        std::fprintf(stderr, "error: no readable .pgm/.png images in %s\n", args.input_dir.c_str());
        return kExitRuntime;
    }
    std::vector<std::vector<double>> corpus;
    for (const auto& path : paths) {
        const auto img = rssl::read_gray(path);
        auto patches = rssl::extract_patches(img, args.patch_size, args.stride);
        for (auto& patch : patches) corpus.push_back(std::move(patch));
    }
    if (corpus.size() < args.dim) {
        std::fprintf(stderr, "error: %zu patches extracted, need at least %zu\n", corpus.size(),
                     args.dim);
        return kExitRuntime;
    }

    rssl::TrainConfig cfg;
    cfg.k = args.dim;
    cfg.hp.lambda1 = args.lambda1;
    cfg.hp.lambda2 = args.lambda2;
    cfg.hp.lambda3 = args.lambda3;
    cfg.outer_iters = args.iters;
    cfg.seed = args.seed;
    cfg.init = args.init == "random" ? rssl::InitKind::random : rssl::InitKind::dct;

    const auto dop = rssl::build_derivative_ops(args.patch_size, args.patch_size);
    const auto groups = rssl::column_groups(args.patch_size);
    auto [basis, report] = rssl::train(corpus, cfg, dop, groups);

    std::printf("iter,objective,seconds\n");
    for (size_t i = 0; i < report.objective_per_iter.size(); ++i)
        std::printf("%zu,%.6f,%.3f\n", i + 1, report.objective_per_iter[i],
                    report.seconds_per_iter[i]);

    rssl::save_model(args.out, {std::move(basis), args.patch_size});
    return kExitOk;
}

struct SegmentArgs {
    std::string model;
    std::string image;
    size_t atoms = 20;
    double tau = 0.1;
    double lambda1 = 0.5, lambda2 = 1.0, lambda3 = 2.0;
    std::string out = "mask.pgm";
};

int cmd_segment(const SegmentArgs& args) {
    const auto model = rssl::load_model(args.model);
    if (args.atoms == 0 || args.atoms > model.basis.k) {
        std::fprintf(stderr, "error: --atoms must lie in 1..%zu for this model\n", model.basis.k);
        return kExitUsage;
    }
    const auto img = rssl::read_gray(args.image);
    const auto basis = model.basis.truncated(args.atoms);

    rssl::HyperParams hp;
    hp.lambda1 = args.lambda1;
    hp.lambda2 = args.lambda2;
    hp.lambda3 = args.lambda3;

    const auto dop = rssl::build_derivative_ops(model.patch_size, model.patch_size);
    const auto groups = rssl::column_groups(model.patch_size);
    const rssl::AlphaSystem sys(basis, dop, hp.lambda1);

    auto [tiles, layout] = rssl::tile_blocks(img, model.patch_size);
    std::vector<std::vector<uint8_t>> tile_masks;
    tile_masks.reserve(tiles.size());
    for (const auto& tile : tiles) {
        const auto dec = rssl::decompose(basis, sys, tile, dop, groups, hp);
        tile_masks.push_back(rssl::mask_from_s(dec.s, args.tau));
    }
    rssl::write_mask(args.out, rssl::assemble_mask(tile_masks, layout));
    return kExitOk;
}

int cmd_eval(const std::string& pred_path, const std::string& gt_path) {
    const auto pred = rssl::threshold_to_mask(rssl::read_gray(pred_path));
    const auto gt = rssl::threshold_to_mask(rssl::read_gray(gt_path));
    if (pred.height != gt.height || pred.width != gt.width) {
        std::fprintf(stderr, "error: mask dimensions differ (%zux%zu vs %zux%zu)\n", pred.width,
                     pred.height, gt.width, gt.height);
        return kExitUsage;
    }
    const auto m = rssl::confusion(pred, gt);
    std::printf("%.4f,%.4f,%.4f\n", m.precision, m.recall, m.f1);
    return kExitOk;
}

struct SynthArgs {
    rssl::SynthSpec spec;
    size_t count = 100;
    std::string out_dir;
};

int cmd_synth(const SynthArgs& args) {
    fs::create_directories(args.out_dir);
    const auto corpus = rssl::gen_corpus(args.spec, args.count);
    const size_t p = args.spec.patch_size;
    char name[64];
    for (size_t i = 0; i < corpus.size(); ++i) {
        rssl::GrayImage img(p, p);
        img.data = corpus[i].x;
        std::snprintf(name, sizeof(name), "sample_%05zu.pgm", i);
        rssl::write_gray_pgm((fs::path(args.out_dir) / name).string(), img);

        rssl::BinaryImage mask(p, p);
        mask.data = corpus[i].gt_mask;
        std::snprintf(name, sizeof(name), "mask_%05zu.pgm", i);
        rssl::write_mask((fs::path(args.out_dir) / name).string(), mask);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust subspace learning for background/foreground segmentation"};
    app.require_subcommand(1);

    TrainArgs train_args;
    auto* train = app.add_subcommand("train", "learn a subspace from an image directory");
    train->add_option("input_dir", train_args.input_dir, "directory of .pgm/.png images")->required();
    train->add_option("--patch-size", train_args.patch_size, "square patch side")->capture_default_str();
    train->add_option("--stride", train_args.stride, "patch scan step")->capture_default_str();
    train->add_option("--dim", train_args.dim, "subspace dimension")->capture_default_str();
    train->add_option("--lambda1", train_args.lambda1, "smoothness weight")->capture_default_str();
    train->add_option("--lambda2", train_args.lambda2, "sparsity weight")->capture_default_str();
    train->add_option("--lambda3", train_args.lambda3, "group weight")->capture_default_str();
    train->add_option("--iters", train_args.iters, "outer iterations")->capture_default_str();
    train->add_option("--init", train_args.init, "dct or random")
        ->check(CLI::IsMember({"dct", "random"}))
        ->capture_default_str();
    train->add_option("--seed", train_args.seed, "seed for randomized paths")->capture_default_str();
    train->add_option("--out", train_args.out, "output model path")->capture_default_str();

    SegmentArgs seg_args;
    auto* segment = app.add_subcommand("segment", "segment foreground with a trained model");
    segment->add_option("model", seg_args.model, "model file from train")->required();
    segment->add_option("image", seg_args.image, "image to segment")->required();
    segment->add_option("--atoms", seg_args.atoms, "leading basis atoms to use")->capture_default_str();
    segment->add_option("--tau", seg_args.tau, "outlier threshold")->capture_default_str();
    segment->add_option("--lambda1", seg_args.lambda1, "smoothness weight")->capture_default_str();
    segment->add_option("--lambda2", seg_args.lambda2, "sparsity weight")->capture_default_str();
    segment->add_option("--lambda3", seg_args.lambda3, "group weight")->capture_default_str();
    segment->add_option("--out", seg_args.out, "output mask path")->capture_default_str();

    std::string eval_pred, eval_gt;
    auto* eval = app.add_subcommand("eval", "score a mask against ground truth");
    eval->add_option("pred_mask", eval_pred, "predicted mask (PGM)")->required();
    eval->add_option("gt_mask", eval_gt, "ground-truth mask (PGM)")->required();

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus with ground truth");
    synth->add_option("--patch-size", synth_args.spec.patch_size)->capture_default_str();
    synth->add_option("--bg-rank", synth_args.spec.bg_rank)->capture_default_str();
    synth->add_option("--outlier-prob", synth_args.spec.outlier_prob)->capture_default_str();
    synth->add_option("--outlier-mag", synth_args.spec.outlier_mag)->capture_default_str();
    synth->add_option("--noise-sigma", synth_args.spec.noise_sigma)->capture_default_str();
    synth->add_option("--seed", synth_args.spec.seed)->capture_default_str();
    synth->add_option("--count", synth_args.count, "number of samples")->capture_default_str();
    synth->add_option("--out-dir", synth_args.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*train) return cmd_train(train_args);
        if (*segment) return cmd_segment(seg_args);
        if (*eval) return cmd_eval(eval_pred, eval_gt);
        if (*synth) return cmd_synth(synth_args);
    } catch (const rssl::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitUsage;
}
