#ifndef DIALOOP_DIALOOP_H
#define DIALOOP_DIALOOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DL_API __declspec(dllexport)
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_INVALID_INPUT = 1,
  DL_ERR_IO = 2,
  DL_ERR_PARSE = 3,
  DL_ERR_DIVERGED = 4,
  DL_ERR_NUMERICAL = 5,
  DL_ERR_INTERNAL = 6
} dl_status;

/* Message of the last failed call on this thread; "" after a success. */
DL_API const char* dl_last_error(void);
/* Pipeline stage of the last failure, or "" when it was not a stage. */
DL_API const char* dl_last_error_stage(void);
DL_API const char* dl_status_name(dl_status status);
DL_API const char* dl_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
DL_API void dl_string_free(char* s);

/* Receives one progress line at a time. */
typedef void (*dl_log_fn)(const char* line, void* user);

/* ---- world ---- */
typedef struct dl_world dl_world;

DL_API dl_status dl_world_generate(uint64_t seed, dl_world** out);
DL_API dl_status dl_world_load(const char* path, dl_world** out);
DL_API dl_status dl_world_save(const dl_world* world, const char* path);
/* {"domains": ..., "entities": ..., "hash": ...} */
DL_API dl_status dl_world_summary(const dl_world* world, char** json_out);
DL_API void dl_world_free(dl_world* world);

/* config_json: corpus config object ("" or NULL for defaults). Writes JSONL
   and returns {"dialogs", "success_rate", "hash", ...}. */
DL_API dl_status dl_corpus_generate(const dl_world* world, const char* config_json, uint64_t seed, const char* path,
                                    char** summary_out);

/* ---- training ---- */
/* role: "ds", "gus" or "gus-nogst". config_json: SL config object. */
DL_API dl_status dl_train_sl(const dl_world* world, const char* role, const char* corpus_path, const char* config_json,
                             const char* checkpoint_out, dl_log_fn log, void* log_user, char** summary_out);

/* user: "ABUS", "GUS" or "GUS-noGST"; user_checkpoint is ignored for ABUS.
   Summary has "diverged" set when the divergence guard fired; the call
   still returns DL_OK and run_dir holds the best snapshot. */
DL_API dl_status dl_train_rl(const dl_world* world, const char* ds_checkpoint, const char* user,
                             const char* user_checkpoint, const char* config_json, const char* run_dir, dl_log_fn log,
                             void* log_user, char** summary_out);

/* ---- evaluation ---- */
/* request_json fields:
     mode: "interaction" | "corpus" | "cross"
     ds: checkpoint (interaction, corpus)
     user: simulator name (interaction)
     systems: [{"name", "checkpoint"}], users: [names] (cross)
     gus, gus_nogst: GUS checkpoints when those users are named
     test_corpus: JSONL path (corpus)
     n_goals, seed, max_turns
     dialogs_out: optional JSONL path for the generated dialogs
   Result: report JSON; cross mode adds "csv" and "text". */
DL_API dl_status dl_evaluate(const dl_world* world, const char* request_json, char** result_out);

/* Writes <prefix>.txt and optionally <prefix>_scores.csv from a dialog
   JSONL file or a saved chat session. mode: "lexicalized" | "delexicalized". */
DL_API dl_status dl_export_transcripts(const char* dialogs_path, const char* prefix, const char* mode,
                                       int with_scoring_sheet);

/* ---- interactive chat ---- */
typedef struct dl_chat dl_chat;

DL_API dl_status dl_chat_open(const dl_world* world, const char* ds_checkpoint, uint64_t seed, dl_chat** out);
/* *response stays valid until the next call on this session. */
DL_API dl_status dl_chat_say(dl_chat* chat, const char* utterance, const char** response, int* finished);
/* ended_by: "quit" or "bye". */
DL_API dl_status dl_chat_save(const dl_chat* chat, const char* path, const char* ended_by);
/* Regenerates the responses of a saved session; returns a JSON array. */
DL_API dl_status dl_chat_replay(const dl_world* world, const char* ds_checkpoint, const char* session_path,
                                char** responses_out);
DL_API void dl_chat_free(dl_chat* chat);

/* ---- pipeline ---- */
/* Built-in profile ("smoke", "desk", "paper-shape") merged with an optional
   JSON patch, as full config JSON. A non-zero master_seed then derives the
   world, corpus and SL seeds from it. */
DL_API dl_status dl_config_resolve(const char* profile, const char* patch_json, uint64_t master_seed,
                                   char** config_out);
/* config_json: a full config (see dl_config_resolve). Result:
   {"report": path of report.json, "report_hash", "diverged", "timings"}. */
DL_API dl_status dl_pipeline_run(const char* config_json, const char* out_dir, int resume, dl_log_fn log,
                                 void* log_user, char** result_out);

#ifdef __cplusplus
}
#endif

#endif
