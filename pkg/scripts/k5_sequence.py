"""Decomposition sequence of {K5} and the backwards replay from its last stage."""
import argparse
import json
from dataclasses import dataclass

from antiramsey.families import k5_determination_check


@dataclass
class Config:
    freeze_p: bool = False
    json_out: str | None = None


def main(cfg: Config) -> int:
    rep = k5_determination_check(reevaluate_p=not cfg.freeze_p)
    for i, st in enumerate(rep.sequence.stages):
        print(f"stage {i}: p={st.p} |F|={len(st.family)} M={' '.join(st.decomposition.to_graph6())}")
    print(rep.table())
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(rep.to_dict(), fh, indent=2)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--freeze-p", action="store_true")
    ap.add_argument("--json-out")
    a = ap.parse_args()
    raise SystemExit(main(Config(a.freeze_p, a.json_out)))
