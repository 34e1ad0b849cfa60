#include "annetto/example_kbs.hpp"

#include "annetto/builder.hpp"
#include "annetto/turtle.hpp"
#include "annetto/vocab.hpp"

#include <array>
#include <fstream>

namespace annetto::examples {

namespace v = vocab;

KB build_simple_classifier() {
    KB kb = make_kb();

    Iri config = add_configuration(kb, "simple_classification");
    Iri net = add_network(kb, config, "simple_classification_network", v::kClassification);

    Iri input = add_layer(kb, net, "sc_input", v::kInputLayer);
    Iri fc1 = add_layer(kb, net, "sc_fc1", v::kFullyConnectedLayer, v::kRelu);
    Iri fc2 = add_layer(kb, net, "sc_fc2", v::kFullyConnectedLayer, v::kRelu);
    Iri fc3 = add_layer(kb, net, "sc_fc3", v::kFullyConnectedLayer, v::kSoftmax);
    Iri output = add_layer(kb, net, "sc_output", v::kOutputLayer);
    connect(kb, input, fc1);
    connect(kb, fc1, fc2);
    connect(kb, fc2, fc3);
    connect(kb, fc3, output);

    add_objective(kb, net, "sc_objective", v::kCostFunction);

    Iri strategy = add_training(kb, config, "simple_classification_Strategy");
    Iri session = add_session(kb, strategy, "sc_session");
    Iri step = add_step(kb, session, "sc_step", v::kTrainingSingle, net);
    add_optimizer(kb, step, "sc_optimizer");

    Iri train_data = add_dataset(kb, "mnist_train", v::kDataset);
    Iri test_data = add_dataset(kb, "mnist_test", v::kDataset);
    add_pipe(kb, "sc_train_pipe", train_data, input);
    add_pipe(kb, "sc_eval_pipe", test_data, input);

    Iri metric = add_function(kb, "sc_accuracy", v::kAccuracy);
    add_evaluation(kb, "sc_evaluation", net, config, strategy, metric, test_data,
                   kSimpleClassifierScore, "2018-03-26T09:00:00");
    return kb;
}

KB build_gan() {
    KB kb = make_kb();

    Iri config = add_configuration(kb, "GAN");
    Iri generator = add_network(kb, config, "GAN_Generator", v::kGeneration);
    Iri discriminator = add_network(kb, config, "GAN_Discriminator", v::kDiscrimination);
    Iri gan = add_network(kb, config, "GAN_GAN", v::kAdversarial);

    Iri gen_input = add_layer(kb, generator, "gan_gen_input", v::kInputLayer);
    Iri gen_fc1 = add_layer(kb, generator, "gan_gen_fc1", v::kFullyConnectedLayer, v::kRelu);
    Iri gen_fc2 = add_layer(kb, generator, "gan_gen_fc2", v::kFullyConnectedLayer, v::kRelu);
    Iri gen_output = add_layer(kb, generator, "gan_gen_output", v::kOutputLayer);
    connect(kb, gen_input, gen_fc1);
    connect(kb, gen_fc1, gen_fc2);
    connect(kb, gen_fc2, gen_output);

    Iri dis_input = add_layer(kb, discriminator, "gan_dis_input", v::kInputLayer);
    Iri dis_fc1 = add_layer(kb, discriminator, "gan_dis_fc1", v::kFullyConnectedLayer, v::kRelu);
    Iri dis_fc2 = add_layer(kb, discriminator, "gan_dis_fc2", v::kFullyConnectedLayer, v::kSoftmax);
    Iri dis_output = add_layer(kb, discriminator, "gan_dis_output", v::kOutputLayer);
    connect(kb, dis_input, dis_fc1);
    connect(kb, dis_fc1, dis_fc2);
    connect(kb, dis_fc2, dis_output);

    // The composite network stacks the generator into the discriminator;
    // its layers are shared with the two constituent networks.
    Iri gan_input = add_layer(kb, gan, "gan_gan_input", v::kInputLayer);
    Iri gan_g1 = add_layer(kb, gan, "gan_gan_g1", v::kFullyConnectedLayer, v::kRelu);
    Iri gan_g2 = add_layer(kb, gan, "gan_gan_g2", v::kFullyConnectedLayer, v::kRelu);
    Iri gan_d1 = add_layer(kb, gan, "gan_gan_d1", v::kFullyConnectedLayer, v::kRelu);
    Iri gan_d2 = add_layer(kb, gan, "gan_gan_d2", v::kFullyConnectedLayer, v::kSoftmax);
    Iri gan_output = add_layer(kb, gan, "gan_gan_output", v::kOutputLayer);
    connect(kb, gan_input, gan_g1);
    connect(kb, gan_g1, gan_g2);
    connect(kb, gan_g2, gan_d1);
    connect(kb, gan_d1, gan_d2);
    connect(kb, gan_d2, gan_output);
    same_layer(kb, gan_g1, gen_fc1);
    same_layer(kb, gan_g2, gen_fc2);
    same_layer(kb, gan_d1, dis_fc1);
    same_layer(kb, gan_d2, dis_fc2);

    // One objective shared by all three networks, distinguished by the
    // labelsets piped into the output layers.
    Iri objective = add_objective(kb, generator, "gan_objective", v::kCostFunction);
    link_objective(kb, discriminator, objective);
    link_objective(kb, gan, objective);
    Iri real_labels = add_dataset(kb, "gan_real_labels", v::kLabelset);
    Iri fake_labels = add_dataset(kb, "gan_fake_labels", v::kLabelset);
    add_pipe(kb, "gan_dis_real_label_pipe", real_labels, dis_output);
    add_pipe(kb, "gan_dis_fake_label_pipe", fake_labels, dis_output);
    add_pipe(kb, "gan_gan_label_pipe", real_labels, gan_output);

    Iri mnist = add_dataset(kb, "mnist", v::kDataset);
    Iri noise = add_dataset(kb, "gan_random_noise", v::kDataset);
    Iri generated = add_dataset(kb, "gan_generated_output", v::kDataset);
    set_transient(kb, generated);
    add_pipe(kb, "gan_dis_data_pipe", mnist, dis_input);
    add_pipe(kb, "gan_dis_generated_pipe", generated, dis_input);
    add_pipe(kb, "gan_gen_noise_pipe", noise, gen_input);
    add_pipe(kb, "gan_gan_noise_pipe", noise, gan_input);

    // Five discriminator updates per generator update: the three inner
    // steps run in a loop, then the composite network trains once.
    Iri strategy = add_training(kb, config, "gan_strategy");
    Iri session = add_session(kb, strategy, "gan_session");
    Iri step_mnist = add_step(kb, session, "gan_discriminate_mnist", v::kTrainingSingle, discriminator);
    Iri step_fpass =
        add_step(kb, session, "gan_gen_fpass", v::kTrainingSingleForwardOnly, generator);
    Iri step_genout =
        add_step(kb, session, "gan_discriminate_generatorout", v::kTrainingSingle, discriminator);
    set_produces(kb, step_fpass, generated);
    Iri loop = add_loop(kb, session, "gan_trainloop", 5, {step_mnist, step_fpass, step_genout});
    Iri step_generator =
        add_step(kb, session, "gan_generatorstep", v::kTrainingSingle, gan, loop);
    add_optimizer(kb, step_mnist, "gan_optimizer");
    add_optimizer(kb, step_genout, "gan_optimizer");
    add_optimizer(kb, step_generator, "gan_optimizer");

    Iri metric = add_function(kb, "gan_parzen_metric", v::kMetric,
                              "\\frac{1}{N}\\sum_i \\log \\hat{p}(x_i)");
    add_evaluation(kb, "gan_evaluation", generator, config, strategy, metric, mnist,
                   kGanParzenScore);
    add_trained_model(kb, "gan_trained_model");
    return kb;
}

KB build_aae() {
    KB kb = make_kb();

    Iri config = add_configuration(kb, "AAE");
    Iri autoencoder = add_network(kb, config, "AAE_AE", v::kGeneration);
    Iri style_dis = add_network(kb, config, "AAE_StyleDiscriminator", v::kDiscrimination);
    Iri label_dis = add_network(kb, config, "AAE_LabelDiscriminator", v::kDiscrimination);
    Iri style_gen = add_network(kb, config, "AAE_StyleGenerator", v::kGeneration);
    Iri label_gen = add_network(kb, config, "AAE_LabelGenerator", v::kClustering);
    Iri style_gan = add_network(kb, config, "AAE_StyleGAN", v::kAdversarial);
    Iri label_gan = add_network(kb, config, "AAE_LabelGAN", v::kAdversarial);

    // Autoencoder: the encoder splits into a style and a label branch; the
    // decoder concatenates both branches and reconstructs the input.
    Iri ae_input = add_layer(kb, autoencoder, "aae_input", v::kInputLayer);
    Iri ae_enc = add_layer(kb, autoencoder, "aae_enc_fc1", v::kFullyConnectedLayer, v::kRelu);
    Iri ae_split = add_layer(kb, autoencoder, "aae_split", v::kSeparationLayer);
    Iri ae_style = add_layer(kb, autoencoder, "aae_style_fc", v::kFullyConnectedLayer, v::kRelu);
    Iri ae_label = add_layer(kb, autoencoder, "aae_label_fc", v::kFullyConnectedLayer, v::kRelu);
    Iri ae_concat = add_layer(kb, autoencoder, "aae_concat", v::kConcatLayer);
    Iri ae_dec1 = add_layer(kb, autoencoder, "aae_dec_fc1", v::kFullyConnectedLayer, v::kRelu);
    Iri ae_dec2 = add_layer(kb, autoencoder, "aae_dec_fc2", v::kFullyConnectedLayer, v::kSoftmax);
    Iri ae_output = add_layer(kb, autoencoder, "aae_output", v::kOutputLayer);
    connect(kb, ae_input, ae_enc);
    connect(kb, ae_enc, ae_split);
    connect(kb, ae_split, ae_style);
    connect(kb, ae_split, ae_label);
    connect(kb, ae_style, ae_concat);
    connect(kb, ae_label, ae_concat);
    connect(kb, ae_concat, ae_dec1);
    connect(kb, ae_dec1, ae_dec2);
    connect(kb, ae_dec2, ae_output);

    auto small_network = [&kb](const Iri& net, const std::string& stem) {
        Iri input = add_layer(kb, net, stem + "_input", v::kInputLayer);
        Iri fc1 = add_layer(kb, net, stem + "_fc1", v::kFullyConnectedLayer, v::kRelu);
        Iri fc2 = add_layer(kb, net, stem + "_fc2", v::kFullyConnectedLayer, v::kSoftmax);
        Iri output = add_layer(kb, net, stem + "_output", v::kOutputLayer);
        connect(kb, input, fc1);
        connect(kb, fc1, fc2);
        connect(kb, fc2, output);
        return std::array<Iri, 4>{input, fc1, fc2, output};
    };
    auto encoder_network = [&kb](const Iri& net, const std::string& stem) {
        Iri input = add_layer(kb, net, stem + "_input", v::kInputLayer);
        Iri fc1 = add_layer(kb, net, stem + "_fc1", v::kFullyConnectedLayer, v::kRelu);
        Iri fc2 = add_layer(kb, net, stem + "_fc2", v::kFullyConnectedLayer, v::kRelu);
        Iri output = add_layer(kb, net, stem + "_output", v::kOutputLayer);
        connect(kb, input, fc1);
        connect(kb, fc1, fc2);
        connect(kb, fc2, output);
        return std::array<Iri, 4>{input, fc1, fc2, output};
    };

    auto styledis = small_network(style_dis, "aae_styledis");
    auto labeldis = small_network(label_dis, "aae_labeldis");

    // The generators are the encoder branches seen as stand-alone networks.
    auto stylegen = encoder_network(style_gen, "aae_stylegen");
    same_layer(kb, stylegen[1], ae_enc);
    same_layer(kb, stylegen[2], ae_style);
    auto labelgen = encoder_network(label_gen, "aae_labelgen");
    same_layer(kb, labelgen[1], ae_enc);
    same_layer(kb, labelgen[2], ae_label);

    // Composite adversarial networks: generator branch into discriminator.
    auto composite = [&kb](const Iri& net, const std::string& stem) {
        Iri input = add_layer(kb, net, stem + "_input", v::kInputLayer);
        Iri g1 = add_layer(kb, net, stem + "_g1", v::kFullyConnectedLayer, v::kRelu);
        Iri g2 = add_layer(kb, net, stem + "_g2", v::kFullyConnectedLayer, v::kRelu);
        Iri d1 = add_layer(kb, net, stem + "_d1", v::kFullyConnectedLayer, v::kRelu);
        Iri d2 = add_layer(kb, net, stem + "_d2", v::kFullyConnectedLayer, v::kSoftmax);
        Iri output = add_layer(kb, net, stem + "_output", v::kOutputLayer);
        connect(kb, input, g1);
        connect(kb, g1, g2);
        connect(kb, g2, d1);
        connect(kb, d1, d2);
        connect(kb, d2, output);
        return std::array<Iri, 6>{input, g1, g2, d1, d2, output};
    };
    auto stylegan = composite(style_gan, "aae_stylegan");
    same_layer(kb, stylegan[1], stylegen[1]);
    same_layer(kb, stylegan[2], stylegen[2]);
    same_layer(kb, stylegan[3], styledis[1]);
    same_layer(kb, stylegan[4], styledis[2]);
    auto labelgan = composite(label_gan, "aae_labelgan");
    same_layer(kb, labelgan[1], labelgen[1]);
    same_layer(kb, labelgan[2], labelgen[2]);
    same_layer(kb, labelgan[3], labeldis[1]);
    same_layer(kb, labelgan[4], labeldis[2]);

    Iri recon_obj = add_objective(kb, autoencoder, "aae_recon_objective", v::kCostFunction);
    (void)recon_obj;
    Iri style_obj = add_objective(kb, style_dis, "aae_style_adv_objective", v::kCostFunction);
    link_objective(kb, style_gen, style_obj);
    link_objective(kb, style_gan, style_obj);
    Iri label_obj = add_objective(kb, label_dis, "aae_label_adv_objective", v::kCostFunction);
    link_objective(kb, label_gen, label_obj);
    link_objective(kb, label_gan, label_obj);

    Iri train_data = add_dataset(kb, "aae_train_data", v::kDataset);
    Iri test_data = add_dataset(kb, "aae_test_data", v::kDataset);
    Iri gaussian = add_dataset(kb, "aae_gaussian_noise", v::kDataset);
    Iri categorical = add_dataset(kb, "aae_categorical_noise", v::kDataset);
    Iri style_enc = add_dataset(kb, "aae_style_encodings", v::kDataset);
    Iri label_enc = add_dataset(kb, "aae_label_encodings", v::kDataset);
    set_transient(kb, style_enc);
    set_transient(kb, label_enc);
    add_pipe(kb, "aae_train_pipe", train_data, ae_input);
    add_pipe(kb, "aae_eval_pipe", test_data, ae_input);
    add_pipe(kb, "aae_stylegen_data_pipe", train_data, stylegen[0]);
    add_pipe(kb, "aae_labelgen_data_pipe", train_data, labelgen[0]);
    add_pipe(kb, "aae_stylegan_data_pipe", train_data, stylegan[0]);
    add_pipe(kb, "aae_labelgan_data_pipe", train_data, labelgan[0]);
    add_pipe(kb, "aae_styledis_noise_pipe", gaussian, styledis[0]);
    add_pipe(kb, "aae_labeldis_noise_pipe", categorical, labeldis[0]);
    add_pipe(kb, "aae_styledis_enc_pipe", style_enc, styledis[0]);
    add_pipe(kb, "aae_labeldis_enc_pipe", label_enc, labeldis[0]);

    Iri strategy = add_training(kb, config, "aae_strategy");
    Iri session = add_session(kb, strategy, "aae_session");
    Iri s1 = add_step(kb, session, "aae_autoencoder_step", v::kTrainingSingle, autoencoder);
    Iri s2 = add_step(kb, session, "aae_style_forward", v::kTrainingSingleForwardOnly, style_gen, s1);
    Iri s3 = add_step(kb, session, "aae_label_forward", v::kTrainingSingleForwardOnly, label_gen, s2);
    Iri s4 = add_step(kb, session, "aae_styledis_noise_step", v::kTrainingSingle, style_dis, s3);
    Iri s5 = add_step(kb, session, "aae_labeldis_noise_step", v::kTrainingSingle, label_dis, s4);
    Iri s6 = add_step(kb, session, "aae_styledis_encodings_step", v::kTrainingSingle, style_dis, s5);
    Iri s7 = add_step(kb, session, "aae_labeldis_encodings_step", v::kTrainingSingle, label_dis, s6);
    Iri s8 = add_step(kb, session, "aae_stylegen_step", v::kTrainingSingle, style_gan, s7);
    Iri s9 = add_step(kb, session, "aae_labelgen_step", v::kTrainingSingle, label_gan, s8);
    set_produces(kb, s2, style_enc);
    set_produces(kb, s3, label_enc);

    for (const Iri& layer : {ae_enc, ae_style, ae_label, ae_dec1, ae_dec2}) {
        set_updates_layer(kb, s1, layer);
    }
    for (const Iri& step : {s4, s6}) {
        set_updates_layer(kb, step, styledis[1]);
        set_updates_layer(kb, step, styledis[2]);
    }
    for (const Iri& step : {s5, s7}) {
        set_updates_layer(kb, step, labeldis[1]);
        set_updates_layer(kb, step, labeldis[2]);
    }
    set_updates_layer(kb, s8, stylegan[1]);
    set_updates_layer(kb, s8, stylegan[2]);
    set_updates_layer(kb, s9, labelgan[1]);
    set_updates_layer(kb, s9, labelgan[2]);

    for (const Iri& step : {s1, s4, s5, s6, s7, s8, s9}) {
        add_optimizer(kb, step, "aae_optimizer");
    }

    Iri metric = add_function(kb, "aae_accuracy", v::kAccuracy);
    add_evaluation(kb, "aae_evaluation", label_gen, config, strategy, metric, test_data,
                   kAaeClusteringScore, "2018-03-27T12:00:00");
    return kb;
}

namespace {

constexpr std::string_view kQ1 = R"(select ?configuration ?evaluation_score where {
    ?configuration a :ANNConfiguration.
    ?configuration :hasTrainingStrategy ?tstrategy;
                   :hasNetwork ?n.
    ?n :hasTaskType ?type.
    ?type a :Classification.
    ?evaluation a :NetworkEvaluation;
        :evaluatesNetwork ?n;
        :eval_score ?evaluation_score. {
        select ?tstrategy (count(?step) as ?steps) where {
            ?tstrategy :hasTrainingSession ?tsession.
            ?tsession :hasTrainingStep ?step
        } GROUP BY ?tstrategy HAVING (?steps > 2)
    }
}
)";

constexpr std::string_view kQ2 = R"(select distinct ?c where {
    ?c a :ANNConfiguration;
       :hasNetwork ?n. {
        select ?n (count(?hl) as ?layers) where {
        ?n :hasLayer ?l;
        :hasLayer ?hl.
        ?hl a :HiddenLayer.
        ?l a :ConcatLayer.
        } GROUP BY ?n HAVING (?layers > 3)
    }
}
)";

constexpr std::string_view kQ3 = R"(select distinct ?n where {
    ?n a :Network;
         :hasLayer ?l.
    ?l a :SeparationLayer.

    ?l :nextLayer ?left;
       :nextLayer ?right.

    FILTER (?left != ?right)

    ?left :nextLayer+ ?c.
    ?right :nextLayer+ ?c.

    ?c a :ConcatLayer.
    ?c :previousLayer ?cpl.
    ?c :previousLayer ?cpr.

    ?cpl :hasActivationFunction ?fcpl.
    ?fcpl a :Relu.

    ?cpr :hasActivationFunction ?fcpr.
    ?fcpr a :Relu.
}
)";

constexpr std::string_view kQ4 = R"(select ?configuration ?evaluation_score where {
    ?configuration a :ANNConfiguration.
    ?configuration   :hasTrainingStrategy ?tstrategy;
                     :hasNetwork ?n.
    ?n :hasTaskType ?type.
    ?type a :Clustering.
    ?evaluation a :NetworkEvaluation;
                  :evaluatesNetwork ?n;
                  :eval_score ?evaluation_score. {
        select ?tstrategy (count(?step) as ?steps) where {
               ?tstrategy :hasTrainingSession ?tsession.
               ?tsession :hasTrainingStep ?step
        } GROUP BY ?tstrategy HAVING (?steps > 2)
    }
}
)";

// Variant of q1 that follows the documented intent instead of the strategy
// step-count restriction: score threshold, no HAVING subselect. On the
// stock knowledge bases q1 returns nothing (the classifier strategy has a
// single training step) while this one returns the classifier.
constexpr std::string_view kQ1Prose = R"(select ?configuration ?evaluation_score where {
    ?configuration a :ANNConfiguration.
    ?configuration :hasTrainingStrategy ?tstrategy;
                   :hasNetwork ?n.
    ?n :hasTaskType ?type.
    ?type a :Classification.
    ?evaluation a :NetworkEvaluation;
        :evaluatesNetwork ?n;
        :eval_score ?evaluation_score.
    FILTER (?evaluation_score > 0.7)
}
)";

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw Error("write failed for '" + path.string() + "'");
    }
}

}  // namespace

std::string_view query_text(std::string_view name) {
    if (name == "q1") return kQ1;
    if (name == "q2") return kQ2;
    if (name == "q3") return kQ3;
    if (name == "q4") return kQ4;
    if (name == "q1_prose") return kQ1Prose;
    throw Error("unknown stock query '" + std::string(name) + "'");
}

void export_examples(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error("cannot create directory '" + dir.string() + "': " + ec.message());
    }
    write_file(dir / "simple.ttl", serialize_turtle(build_simple_classifier().graph));
    write_file(dir / "gan.ttl", serialize_turtle(build_gan().graph));
    write_file(dir / "aae.ttl", serialize_turtle(build_aae().graph));
    for (std::string_view q : {"q1", "q2", "q3", "q4", "q1_prose"}) {
        write_file(dir / (std::string(q) + ".rq"), query_text(q));
    }
}

}  // namespace annetto::examples
