#include "storyfear/storyfear.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "fear.hpp"
#include "lexicon.hpp"
#include "metrics.hpp"
#include "porter.hpp"
#include "text_clean.hpp"

namespace {

thread_local std::string g_last_error;

int store_error(const storyfear::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
}

int store_error(const std::exception& e) {
    g_last_error = e.what();
    return SF_ERR_INTERNAL;
}

// Runs fn, translating exceptions to status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const storyfear::Error& e) {
        return store_error(e);
    } catch (const std::exception& e) {
        return store_error(e);
    } catch (...) {
        g_last_error = "unknown error";
        return SF_ERR_INTERNAL;
    }
}

int arg_error(const char* msg) {
    g_last_error = msg;
    return SF_ERR_ARG;
}

}  // namespace

struct sf_config {
    storyfear::RunConfig config;
    std::string scratch;  // backs sf_config_get
};

struct sf_lexicon {
    storyfear::SstopLexicon lexicon;
};

struct sf_embedding {
    storyfear::EmbeddingTable table;
};

struct sf_fear_model {
    storyfear::FearModel model;
};

extern "C" {

const char* sf_version(void) { return "0.1.0"; }

const char* sf_last_error(void) { return g_last_error.c_str(); }

void sf_free(void* p) { std::free(p); }

sf_config* sf_config_new(void) { return new (std::nothrow) sf_config; }

void sf_config_free(sf_config* config) { delete config; }

int sf_config_load_file(sf_config* config, const char* path) {
    if (!config || !path) return arg_error("sf_config_load_file: NULL argument");
    return guarded([&] {
        storyfear::RunConfig loaded = storyfear::RunConfig::from_file(path);
        // File values fill in; explicit sf_config_set calls win.
        for (const auto& [key, value] : config->config.entries()) {
            loaded.set(key, value);
        }
        config->config = std::move(loaded);
        return SF_OK;
    });
}

int sf_config_set(sf_config* config, const char* key, const char* value) {
    if (!config || !key || !value) return arg_error("sf_config_set: NULL argument");
    return guarded([&] {
        config->config.set(key, value);
        return SF_OK;
    });
}

const char* sf_config_get(sf_config* config, const char* key) {
    if (!config || !key) return nullptr;
    auto v = config->config.get(key);
    if (!v) return nullptr;
    config->scratch = *v;
    return config->scratch.c_str();
}

int sf_run(const sf_config* config, const char* command) {
    if (!config || !command) return arg_error("sf_run: NULL argument");
    return guarded([&] {
        storyfear::run_command(config->config, command);
        return SF_OK;
    });
}

int sf_clean_text(const char* text, const char* stopword_path, char** out) {
    if (!text || !out) return arg_error("sf_clean_text: NULL argument");
    return guarded([&] {
        storyfear::StopwordSet stopwords;
        if (!stopword_path) {
            stopwords = storyfear::default_stopwords();
        } else if (*stopword_path != '\0') {
            stopwords = storyfear::load_stopwords(stopword_path);
        }
        const storyfear::CleanResult cleaned = storyfear::clean_text(text, stopwords);
        std::string joined;
        for (std::size_t i = 0; i < cleaned.tokens.size(); ++i) {
            if (i) joined += ' ';
            joined += cleaned.tokens[i];
        }
        char* buf = static_cast<char*>(std::malloc(joined.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, joined.c_str(), joined.size() + 1);
        *out = buf;
        return SF_OK;
    });
}

int sf_porter_stem(const char* word, char* out, size_t cap) {
    if (!word || !out || cap == 0) return arg_error("sf_porter_stem: bad argument");
    return guarded([&] {
        const std::string stem = storyfear::porter_stem(word);
        if (stem.size() + 1 > cap) {
            throw storyfear::ArgError("sf_porter_stem: buffer too small");
        }
        std::memcpy(out, stem.c_str(), stem.size() + 1);
        return SF_OK;
    });
}

int sf_roc_auc(const double* scores, const int* labels, size_t n, double* out) {
    if (!scores || !labels || !out) return arg_error("sf_roc_auc: NULL argument");
    return guarded([&] {
        *out = storyfear::roc_auc(std::vector<double>(scores, scores + n),
                                  std::vector<int>(labels, labels + n));
        return SF_OK;
    });
}

int sf_spearman(const double* x, const double* y, size_t n, double* rho,
                double* p_value) {
    if (!x || !y) return arg_error("sf_spearman: NULL argument");
    return guarded([&] {
        const storyfear::SpearmanResult r = storyfear::spearman(
            std::vector<double>(x, x + n), std::vector<double>(y, y + n));
        if (rho) *rho = r.rho;
        if (p_value) *p_value = r.p_value;
        return SF_OK;
    });
}

int sf_lexicon_open(const char* csv_path, sf_lexicon** out) {
    if (!csv_path || !out) return arg_error("sf_lexicon_open: NULL argument");
    return guarded([&] {
        auto handle = std::make_unique<sf_lexicon>();
        handle->lexicon = storyfear::load_lexicon_csv(csv_path);
        *out = handle.release();
        return SF_OK;
    });
}

void sf_lexicon_free(sf_lexicon* lexicon) { delete lexicon; }

size_t sf_lexicon_size(const sf_lexicon* lexicon) {
    return lexicon ? lexicon->lexicon.size() : 0;
}

int sf_lexicon_score(const sf_lexicon* lexicon, const char* word, double* out) {
    if (!lexicon || !word || !out) return arg_error("sf_lexicon_score: NULL argument");
    const storyfear::SstopEntry* entry = lexicon->lexicon.find(word);
    if (!entry) {
        g_last_error = std::string("no lexicon entry for `") + word + "`";
        return SF_ERR_NOT_FOUND;
    }
    *out = entry->score;
    return SF_OK;
}

int sf_embedding_open(const char* path, sf_embedding** out) {
    if (!path || !out) return arg_error("sf_embedding_open: NULL argument");
    return guarded([&] {
        auto handle = std::make_unique<sf_embedding>();
        handle->table = storyfear::load_embeddings(path);
        *out = handle.release();
        return SF_OK;
    });
}

void sf_embedding_free(sf_embedding* table) { delete table; }

size_t sf_embedding_dim(const sf_embedding* table) {
    return table ? table->table.dim() : 0;
}

size_t sf_embedding_size(const sf_embedding* table) {
    return table ? table->table.size() : 0;
}

int sf_embedding_lookup(const sf_embedding* table, const char* word, double* out) {
    if (!table || !word || !out) return arg_error("sf_embedding_lookup: NULL argument");
    const double* vec = table->table.find(word);
    if (!vec) {
        g_last_error = std::string("word not in embedding table: `") + word + "`";
        return SF_ERR_NOT_FOUND;
    }
    std::memcpy(out, vec, table->table.dim() * sizeof(double));
    return SF_OK;
}

int sf_fear_model_open(const char* path, sf_fear_model** out) {
    if (!path || !out) return arg_error("sf_fear_model_open: NULL argument");
    return guarded([&] {
        auto handle = std::make_unique<sf_fear_model>();
        handle->model = storyfear::load_model(path);
        *out = handle.release();
        return SF_OK;
    });
}

void sf_fear_model_free(sf_fear_model* model) { delete model; }

int sf_fear_score(const sf_fear_model* model, const sf_embedding* table,
                  const char* sentence, double* out) {
    if (!model || !table || !sentence || !out) {
        return arg_error("sf_fear_score: NULL argument");
    }
    return guarded([&] {
        const std::vector<double> features = storyfear::featurize(
            sentence, table->table, storyfear::default_stopwords());
        *out = storyfear::predict_proba(model->model, features);
        return SF_OK;
    });
}

}  // extern "C"
