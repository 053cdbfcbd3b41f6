# Command-line walkthrough
#
# The same pipeline through the resume-ensemble command, driven from Python
# so it runs anywhere. Each call mirrors a shell invocation.

# In[1]:

import json
import tempfile
from pathlib import Path

from resume_ensemble.cli import main

work = Path(tempfile.mkdtemp())
corpus = work / "corpus.jsonl"
config = work / "panel.json"

# resume-ensemble synth --n 200 --seed 1 --out corpus.jsonl

# In[2]:

main(["synth", "--n", "200", "--seed", "1", "--out", str(corpus)])

# A panel of three mock backends. Swap a mock entry for
# {"type": "http", "model_id": ..., "base_url": ...} to call a real
# chat-completion endpoint.

# In[3]:

config.write_text(json.dumps({
    "backends": [
        {"type": "mock", "model_id": "phi", "per_field_error_rate": {"skills": 0.3, "experience": 0.4},
         "corruption_kind": {"skills": "wrong_value", "experience": "wrong_value"}},
        {"type": "mock", "model_id": "gemma", "per_field_error_rate": {"skills": 0.35, "education": 0.38},
         "corruption_kind": {"skills": "drop", "education": "wrong_value"}},
        {"type": "mock", "model_id": "llama", "per_field_error_rate": {"phone": 0.2, "education": 0.4},
         "corruption_kind": {"education": "merge_bullets"}},
    ],
    "weights": {"phi": 3, "gemma": 2, "llama": 1},
    "consensus": {"type": "grounded"},
}))

# resume-ensemble parse --corpus corpus.jsonl --config panel.json --out pred.jsonl --per-model --audit audit.jsonl

# In[4]:

pred = work / "pred.jsonl"
main(["parse", "--corpus", str(corpus), "--config", str(config), "--out", str(pred),
      "--per-model", "--audit", str(work / "audit.jsonl")])
first = json.loads((work / "audit.jsonl").read_text().splitlines()[0])
print({v["field"]: v["strategy_used"] for v in first["votes"]})

# resume-ensemble evaluate --gold corpus.jsonl --pred ensemble=pred.jsonl --pred pred.phi.jsonl ...

# In[5]:

main(["evaluate", "--gold", str(corpus), "--pred", f"ensemble={pred}",
      *[f"--pred={m}={work / f'pred.{m}.jsonl'}" for m in ("phi", "gemma", "llama")]])

# resume-ensemble calibrate --corpus corpus.jsonl --config panel.json

# In[6]:

main(["calibrate", "--corpus", str(corpus), "--config", str(config)])
