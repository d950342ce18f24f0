"""Write the catalog graphs and their ECPs as JSON files for the CLI."""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from ecpbounds import catalog
from ecpbounds.graph import complete_graph


@dataclass(frozen=True)
class ExportConfig:
    out: Path = Path("data")


ENTRIES = {
    "bowtie_chord": (catalog.bowtie_chord, catalog.bowtie_chord_ecp),
    "bowtie_two_chords": (catalog.bowtie_two_chords, catalog.bowtie_two_chords_ecp),
    "bowtie_two_chords_apex": (catalog.bowtie_two_chords_apex, catalog.bowtie_two_chords_apex_ecp),
    "square_two_apexes": (catalog.square_two_apexes, None),
    "k1": (lambda: complete_graph(1), None),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=ExportConfig.out)
    cfg = ExportConfig(ap.parse_args().out)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, (graph, ecp) in ENTRIES.items():
        (cfg.out / f"{name}.json").write_text(json.dumps(graph().to_json()) + "\n")
        if ecp is not None:
            (cfg.out / f"{name}_ecp.json").write_text(json.dumps(ecp().to_json()) + "\n")
    print(f"wrote {len(list(cfg.out.glob('*.json')))} files to {cfg.out}")


if __name__ == "__main__":
    main()
