#!/usr/bin/env python3
"""Write the corpus case inputs: description.txt, meta.json, responses/*.txt.

The response files are the scripted assistant replies used to build replay
fixtures (tools/record_replays.py); goldens come from tools/make_goldens.py.
Multi-turn cases separate user turns with a line containing only `---`.
"""

import json
import os
import sys

CORPUS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


def j(obj):
    return json.dumps(obj, ensure_ascii=False, indent=2)


def fenced(obj, lead="Here is the signal plan."):
    return lead + "\n\n```json\n" + j(obj) + "\n```\n"


FIG3_RESULT1 = [
    {"ringStyle": [
        [{"NBL": {"split": 21}}, {"SBT": {"split": 44}}],
        [{"SBL": {"split": 39}}, {"NBT": {"split": 26}}],
    ]},
    {"stageStyle": [
        [{"WBL": {"greenTime": 17}}, {"EBL": {"greenTime": 17}}],
        [{"WBT": {"greenTime": 22}}, {"EBT": {"greenTime": 22}}],
    ]},
]

FIG3_MAJORS = [
    {"NBL": {"phaseOrder": 1, "greenFlash": 3}},
    {"SBT": {"phaseOrder": 1, "greenFlash": 3}},
    {"SBL": {"phaseOrder": 1, "greenFlash": 3}},
    {"NBT": {"phaseOrder": 1, "greenFlash": 3}},
    {"WBL": {"phaseOrder": 1, "greenFlash": 3}},
    {"EBL": {"phaseOrder": 1, "greenFlash": 3}},
    {"WBT": {"phaseOrder": 1, "greenFlash": 3}},
    {"EBT": {"phaseOrder": 1, "greenFlash": 3}},
    {"NBR": {"phaseOrder": 1, "greenFlash": 3, "parentPhase": "WBL",
             "overlapNum": 0, "isPermissive": 1}},
    {"WBR": {"phaseOrder": 1, "greenFlash": 3, "startTime": 88, "endTime": 21}},
]

C11_RESULT1 = [
    {"ringStyle": [
        [{"WBL": {"split": 49}},
         {"stageStyle": [[{"EBT": {"split": 53}}, {"SouthPed": {"split": 53}}]]},
         {"stageStyle": [[{"EastPed": {"split": 36}}, {"NBL": {"split": 36}}]]}],
        [{"WestPed": {"split": 28}}, {"WBT": {"split": 74}}],
    ]},
]

C39_RESULT1 = [
    {"stageStyle": [
        [{"NBT": {"split": 31}}, {"SBT": {"split": 31}}],
        [{"NBL": {"split": 24}}, {"SBL": {"split": 24}}],
        [{"EBT": {"split": 33}}, {"WBT": {"split": 33}}],
        [{"EBL": {"split": 27}}, {"WBL": {"split": 27}}],
    ]},
]

C39_PEDS = [
    {"WestPedA": {"phaseOrder": 1, "parentPhase": "default"}},
    {"WestPedB": {"phaseOrder": 1, "parentPhase": "default"}},
    {"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}},
    {"SouthPed": {"phaseOrder": 1, "parentPhase": "default"}},
    {"EastPed": {"phaseOrder": 1, "parentPhase": "default"}},
]

ZH_STAGE_RESULT1 = [
    {"stageStyle": [
        [{"北向直行": {"split": 30}}, {"南向直行": {"split": 30}}],
        [{"北向左转": {"split": 24}}, {"南向左转": {"split": 24}}],
        [{"东向直行": {"split": 33}}, {"西向直行": {"split": 33}}],
        [{"东向左转": {"split": 27}}, {"西向左转": {"split": 27}}],
    ]},
]

ZH_PEDS = [
    {"北侧人行": {"phaseOrder": 1, "parentPhase": "default"}},
    {"南侧人行": {"phaseOrder": 1, "parentPhase": "default"}},
    {"东侧人行": {"phaseOrder": 1, "parentPhase": "default"}},
    {"西侧人行": {"phaseOrder": 1, "parentPhase": "default"}},
]


def zh_stage_ir(first_split):
    result1 = [
        {"stageStyle": [
            [{"北向直行": {"split": first_split}}, {"南向直行": {"split": first_split}}],
            [{"北向左转": {"split": 24}}, {"南向左转": {"split": 24}}],
            [{"东向直行": {"split": 33}}, {"西向直行": {"split": 33}}],
            [{"东向左转": {"split": 27}}, {"西向左转": {"split": 27}}],
        ]},
    ]
    return {"result1": result1, "result2": ZH_PEDS, "result3": None}


CASES = {
    "fig3": {
        "language": "en",
        "expected": "valid",
        "description": [
            "First ring NBL 21 s, SBT 44 s; second ring SBL 39 s, NBT 26 s. "
            "Then WBL and EBL green for 17 s, WBT and EBT green time 22 s. "
            "All phases 3 seconds of green flash. NBR is permissive and "
            "overlaps WBL. WBR runs from 88 s to 21 s. Add pedestrian "
            "crossings for the north and south approaches."
        ],
        "responses": [fenced({
            "result1": FIG3_RESULT1,
            "result2": FIG3_MAJORS + [
                {"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}},
                {"SouthPed": {"phaseOrder": 1, "parentPhase": "default"}},
            ],
            "result3": None,
        })],
    },
    "fig3_full": {
        "language": "en",
        "expected": "valid",
        "description": [
            "First ring NBL 21 s, SBT 44 s; second ring SBL 39 s, NBT 26 s. "
            "Then WBL and EBL green for 17 s, WBT and EBT green time 22 s. "
            "All phases 3 seconds of green flash. NBR is permissive and "
            "overlaps WBL. WBR runs from 88 s to 21 s. Add default "
            "pedestrian phases."
        ],
        "responses": [fenced({
            "result1": FIG3_RESULT1,
            "result2": FIG3_MAJORS + [
                {"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}},
                {"SouthPed": {"phaseOrder": 1, "parentPhase": "default"}},
                {"EastPed": {"phaseOrder": 1, "parentPhase": "default"}},
                {"WestPed": {"phaseOrder": 1, "parentPhase": "default"}},
            ],
            "result3": None,
        })],
    },
    "fig2a": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Two rings. First ring WBL 33 s, EBT 24 s, NBL 26 s, SBT 34 s. "
            "Second ring EBL 18 s, WBT 39 s, SBL 26 s, NBT 34 s."
        ],
        "responses": [j({
            "result1": [{"ringStyle": [
                [{"WBL": {"split": 33}}, {"EBT": {"split": 24}},
                 {"NBL": {"split": 26}}, {"SBT": {"split": 34}}],
                [{"EBL": {"split": 18}}, {"WBT": {"split": 39}},
                 {"SBL": {"split": 26}}, {"NBT": {"split": 34}}],
            ]}],
            "result2": [],
            "result3": None,
        }) + "\n"],
    },
    "fig2b": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Five stages: WBL and EBL 25 s; WBT and EBT 33 s; NBL and SBL "
            "26 s; NBT and SBT 20 s; then WBT and EBT again for 12 s. The "
            "north pedestrian crossing runs with the first WBT service."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"WBL": {"split": 25}}, {"EBL": {"split": 25}}],
                [{"WBT": {"split": 33}}, {"EBT": {"split": 33}}],
                [{"NBL": {"split": 26}}, {"SBL": {"split": 26}}],
                [{"NBT": {"split": 20}}, {"SBT": {"split": 20}}],
                [{"WBT": {"split": 12}}, {"EBT": {"split": 12}}],
            ]}],
            "result2": [
                {"NorthPed": {"phaseOrder": 1, "parentPhase": "WBT", "overlapNum": 1}},
            ],
            "result3": None,
        })],
    },
    "fig2c": {
        "language": "en",
        "expected": "valid",
        "description": [
            "A ring block first: ring one WBL 33 s then EBT 24 s, ring two "
            "EBL 18 s then WBT 39 s. After it two stages: NBL and SBL 26 s, "
            "NBT and SBT 34 s."
        ],
        "responses": [fenced({
            "result1": [
                {"ringStyle": [
                    [{"WBL": {"split": 33}}, {"EBT": {"split": 24}}],
                    [{"EBL": {"split": 18}}, {"WBT": {"split": 39}}],
                ]},
                {"stageStyle": [
                    [{"NBL": {"split": 26}}, {"SBL": {"split": 26}}],
                    [{"NBT": {"split": 34}}, {"SBT": {"split": 34}}],
                ]},
            ],
            "result2": [],
            "result3": None,
        })],
    },
    "fig2d": {
        "language": "en",
        "expected": "valid",
        "description": [
            "First ring WBL 34 s, EBT 24 s, NBL 26 s, SBT 32 s. Second ring "
            "EBL 25 s, WBT 33 s, then SBL and EBR together for 26 s, and "
            "NBT 32 s."
        ],
        "responses": [fenced({
            "result1": [{"ringStyle": [
                [{"WBL": {"split": 34}}, {"EBT": {"split": 24}},
                 {"NBL": {"split": 26}}, {"SBT": {"split": 32}}],
                [{"EBL": {"split": 25}}, {"WBT": {"split": 33}},
                 {"stageStyle": [[{"SBL": {"split": 26}}, {"EBR": {"split": 26}}]]},
                 {"NBT": {"split": 32}}],
            ]}],
            "result2": [],
            "result3": None,
        })],
    },
    "c11": {
        "language": "en",
        "expected": "valid",
        "description": [
            "First ring: WBL 49 s, then EBT and the south pedestrian "
            "crossing together for 53 s, then the east pedestrian crossing "
            "and NBL together for 36 s. Second ring: the west pedestrian "
            "crossing 28 s, then WBT 74 s."
        ],
        "responses": [fenced({"result1": C11_RESULT1, "result2": [], "result3": None})],
    },
    "c11_1": {
        "language": "en",
        "expected": "valid",
        "description": [
            "First ring: WBL 49 s, then EBT and the south pedestrian "
            "crossing together for 53 s, then the east pedestrian crossing "
            "and NBL together for 36 s. Second ring: the west pedestrian "
            "crossing 28 s, then WBT 74 s.",
            "Add a permissive EBR running from 60 s to the end of the "
            "cycle, and make NBR permissive from 100 s to 30 s.",
        ],
        "responses": [
            fenced({"result1": C11_RESULT1, "result2": [], "result3": None}),
            fenced({
                "result1": C11_RESULT1,
                "result2": [
                    {"EBR": {"phaseOrder": 1, "startTime": 60,
                             "endTime": "cycleLength", "isPermissive": 1}},
                    {"NBR": {"phaseOrder": 1, "startTime": 100, "endTime": 30,
                             "isPermissive": 1}},
                ],
                "result3": None,
            }, lead="Updated plan with the permissive right turns."),
        ],
    },
    "c39": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Four stages: NBT and SBT 31 s, NBL and SBL 24 s, EBT and WBT "
            "33 s, EBL and WBL 27 s. Add the two-stage west crossing halves "
            "WestPedA and WestPedB plus the default north, south and east "
            "pedestrian crossings."
        ],
        "responses": [fenced({"result1": C39_RESULT1, "result2": C39_PEDS, "result3": None})],
    },
    "c39_1": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Four stages: NBT and SBT 31 s, NBL and SBL 24 s, EBT and WBT "
            "33 s, EBL and WBL 27 s. Add the two-stage west crossing halves "
            "WestPedA and WestPedB plus the default north, south and east "
            "pedestrian crossings.",
            "Change SBL to a dummy phase.",
        ],
        "responses": [
            fenced({"result1": C39_RESULT1, "result2": C39_PEDS, "result3": None}),
            fenced({
                "result1": [{"stageStyle": [
                    [{"NBT": {"split": 31}}, {"SBT": {"split": 31}}],
                    [{"NBL": {"split": 24}}, {"dummyPhase": {"split": 24}}],
                    [{"EBT": {"split": 33}}, {"WBT": {"split": 33}}],
                    [{"EBL": {"split": 27}}, {"WBL": {"split": 27}}],
                ]}],
                "result2": C39_PEDS,
                "result3": None,
            }, lead="Replaced SBL with a dummy phase."),
        ],
    },
    "allped": {
        "language": "en",
        "expected": "valid",
        "description": [
            "NBT and SBT 30 s, EBT and WBT 30 s, then an exclusive "
            "pedestrian stage of 30 s."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"NBT": {"split": 30}}, {"SBT": {"split": 30}}],
                [{"EBT": {"split": 30}}, {"WBT": {"split": 30}}],
                [{"AllPed": {"split": 30}}],
            ]}],
            "result2": [],
            "result3": None,
        })],
    },
    "protected_permissive": {
        "language": "en",
        "expected": "valid",
        "description": [
            "WBL and EBL protected for 20 s, then WBT and EBT for 40 s. "
            "WBL continues permissive from 20 s to 60 s."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"WBL": {"split": 20}}, {"EBL": {"split": 20}}],
                [{"WBT": {"split": 40}}, {"EBT": {"split": 40}}],
            ]}],
            "result2": [
                {"WBL": {"phaseOrder": 2, "startTime": 20, "endTime": 60,
                         "isPermissive": 1}},
            ],
            "result3": None,
        })],
    },
    "reservice_merge": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Three stages: WBL and WBT 15 s, then WBT and EBT 24 s, then "
            "NBT and SBT 30 s."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"WBL": {"split": 15}}, {"WBT": {"split": 15}}],
                [{"WBT": {"split": 24}}, {"EBT": {"split": 24}}],
                [{"NBT": {"split": 30}}, {"SBT": {"split": 30}}],
            ]}],
            "result2": [],
            "result3": None,
        })],
    },
    "standalone_greens": {
        "language": "en",
        "expected": "valid",
        "description": [
            "Cycle length 80 s. EBT runs from 0 s to 40 s. WBT green "
            "starts at 45 s and ends at 72 s."
        ],
        "responses": [j({
            "result1": [],
            "result2": [
                {"EBT": {"phaseOrder": 1, "startTime": 0, "endTime": 40}},
                {"WBT": {"phaseOrder": 1, "greenStart": 45, "greenEnd": 72}},
            ],
            "result3": 80,
        }) + "\n"],
    },
    "malformed_unlabeled": {
        "language": "en",
        "expected": "valid",
        "description": ["WBL 20 s, then WBT 40 s."],
        "responses": [fenced({
            "result1": [{"WBL": {"split": 20}}, {"WBT": {"split": 40}}],
            "result2": [],
            "result3": None,
        })],
    },
    "malformed_flat_ring": {
        "language": "en",
        "expected": "valid",
        "description": ["One ring: WBL 20 s, then WBT 40 s."],
        "responses": [fenced({
            "result1": [{"ringStyle": [{"WBL": {"split": 20}}, {"WBT": {"split": 40}}]}],
            "result2": [],
            "result3": None,
        })],
    },
    "malformed_overthink": {
        "language": "en",
        "expected": "valid",
        "description": [
            "WBL and EBL 20 s, then WBT and EBT 40 s. EBR runs standalone "
            "from 20 s to 60 s."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"WBL": {"split": 20}}, {"EBL": {"split": 20}}],
                [{"WBT": {"split": 40}}, {"EBT": {"split": 40}}],
            ]}],
            "result2": [
                {"EBR": {"phaseOrder": 1, "startTime": 20, "endTime": 60, "split": 27}},
            ],
            "result3": None,
        })],
    },
    "zh_stage": {
        "language": "zh",
        "expected": "valid",
        "description": [
            "第一阶段北向直行和南向直行30秒，第二阶段北向左转和南向左转24秒，"
            "第三阶段东向直行和西向直行33秒，第四阶段东向左转和西向左转27秒。"
            "加上四个方向的默认行人相位。"
        ],
        "responses": [fenced(zh_stage_ir(30), lead="信号配时方案如下。")],
    },
    "zh_ring": {
        "language": "zh",
        "expected": "valid",
        "description": [
            "双环结构。第一环：西向左转33秒，东向直行24秒，北向左转26秒，南向直行34秒。"
            "第二环：东向左转18秒，西向直行39秒，南向左转26秒，北向直行34秒。"
        ],
        "responses": [fenced({
            "result1": [{"ringStyle": [
                [{"WBL": {"split": 33}}, {"EBT": {"split": 24}},
                 {"NBL": {"split": 26}}, {"SBT": {"split": 34}}],
                [{"EBL": {"split": 18}}, {"WBT": {"split": 39}},
                 {"SBL": {"split": 26}}, {"NBT": {"split": 34}}],
            ]}],
            "result2": [],
            "result3": None,
        }, lead="信号配时方案如下。")],
    },
    "zh_edit": {
        "language": "zh",
        "expected": "valid",
        "description": [
            "第一阶段北向直行和南向直行30秒，第二阶段北向左转和南向左转24秒，"
            "第三阶段东向直行和西向直行33秒，第四阶段东向左转和西向左转27秒。"
            "加上四个方向的默认行人相位。",
            "把第一阶段改为35秒。",
        ],
        "responses": [
            fenced(zh_stage_ir(30), lead="信号配时方案如下。"),
            fenced(zh_stage_ir(35), lead="已将第一阶段改为35秒。"),
        ],
    },
    "invalid_conflict": {
        "language": "en",
        "expected": "invalid",
        "expected_categories": ["conflict"],
        "description": [
            "NBT and EBT run together for 30 s, then NBL and SBL for 25 s."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"NBT": {"split": 30}}, {"EBT": {"split": 30}}],
                [{"NBL": {"split": 25}}, {"SBL": {"split": 25}}],
            ]}],
            "result2": [],
            "result3": None,
        })],
    },
    "invalid_short_walk": {
        "language": "en",
        "expected": "invalid",
        "expected_categories": ["walk"],
        "description": [
            "WBT and EBT 9 s, then NBT and SBT 40 s. Add the north "
            "pedestrian crossing."
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"WBT": {"split": 9}}, {"EBT": {"split": 9}}],
                [{"NBT": {"split": 40}}, {"SBT": {"split": 40}}],
            ]}],
            "result2": [{"NorthPed": {"phaseOrder": 1, "parentPhase": "default"}}],
            "result3": None,
        })],
    },
    "zh_invalid_walk": {
        "language": "zh",
        "expected": "invalid",
        "expected_categories": ["walk"],
        "description": [
            "东向直行和西向直行8秒，北向直行和南向直行30秒，加北侧人行相位。"
        ],
        "responses": [fenced({
            "result1": [{"stageStyle": [
                [{"东向直行": {"split": 8}}, {"西向直行": {"split": 8}}],
                [{"北向直行": {"split": 30}}, {"南向直行": {"split": 30}}],
            ]}],
            "result2": [{"北侧人行": {"phaseOrder": 1, "parentPhase": "default"}}],
            "result3": None,
        }, lead="信号配时方案如下。")],
    },
}


def main():
    for case_id, case in CASES.items():
        path = os.path.join(CORPUS, case_id)
        os.makedirs(os.path.join(path, "responses"), exist_ok=True)
        with open(os.path.join(path, "description.txt"), "w", encoding="utf-8") as fh:
            fh.write("\n---\n".join(case["description"]) + "\n")
        meta = {
            "id": case_id,
            "language": case["language"],
            "expected": case["expected"],
            "expected_categories": case.get("expected_categories", []),
            "turns": len(case["description"]),
        }
        with open(os.path.join(path, "meta.json"), "w", encoding="utf-8") as fh:
            fh.write(json.dumps(meta, ensure_ascii=False, indent=2) + "\n")
        assert len(case["responses"]) == len(case["description"]), case_id
        for n, text in enumerate(case["responses"], 1):
            with open(os.path.join(path, "responses", f"turn{n}.txt"), "w", encoding="utf-8") as fh:
                fh.write(text)
        print(case_id)
    return 0


if __name__ == "__main__":
    sys.exit(main())
