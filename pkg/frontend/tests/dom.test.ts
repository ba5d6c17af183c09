import { beforeEach, describe, expect, it } from "vitest";
import {
  renderAttributes,
  renderContent,
  renderError,
  renderGraph,
  renderOverview,
  renderWhatIfPanel,
} from "../src/dom.js";
import {
  buildAttributeView,
  buildContentView,
  buildGraphView,
  buildOverview,
  buildWhatIfView,
} from "../src/views.js";
import { score } from "../src/format.js";
import {
  ContentResponse,
  NeighborsResponse,
  ReportResponse,
  SettingChange,
  SummaryResponse,
  WhatIfResponse,
} from "../src/types.js";
import { loadFixture } from "./helpers/load.js";

const report = loadFixture<ReportResponse>("report_0.json");
const summary = loadFixture<SummaryResponse>("summary.json");
const content = loadFixture<ContentResponse>("content_0.json");
const neighbors = loadFixture<NeighborsResponse>("neighbors_0_d2.json");
const whatif = loadFixture<WhatIfResponse>("whatif_attr.json");

let root: HTMLElement;

beforeEach(() => {
  root = document.createElement("div");
});

describe("renderContent", () => {
  const view = buildContentView(content, report);

  it("renders every service-reported span as a highlighted element", () => {
    renderContent(root, view, [], () => {});
    const surfaces: string[] = [];
    for (const post of content.posts) {
      for (const e of post.entities) surfaces.push(e.surface);
      for (const c of post.comments) {
        for (const e of c.entities) surfaces.push(e.surface);
      }
    }
    const spans = Array.from(root.querySelectorAll(".entity"));
    expect(spans.map((s) => s.textContent)).toEqual(surfaces);
    for (const span of spans) {
      expect(span.getAttribute("data-type")).toBeTruthy();
    }
  });

  it("renders one card per post with its full text", () => {
    renderContent(root, view, [], () => {});
    const cards = Array.from(root.querySelectorAll(".post-card"));
    expect(cards.map((c) => c.getAttribute("data-post"))).toEqual(
      content.posts.map((p) => p.post_id),
    );
    cards.forEach((card, i) => {
      const body = card.querySelector(".post-text");
      expect(body?.textContent).toBe(content.posts[i].text);
    });
  });

  it("stages a post visibility change on click", () => {
    const staged: SettingChange[] = [];
    renderContent(root, view, [], (c) => staged.push(c));
    const withOptions = view.posts.find((p) => p.options.length > 0)!;
    const card = root.querySelector(`[data-post="${withOptions.postId}"]`)!;
    const button = card.querySelector<HTMLButtonElement>(".option-button")!;
    button.click();
    expect(staged).toEqual([
      {
        kind: "post",
        item: withOptions.postId,
        setting: withOptions.options[0].setting,
      },
    ]);
  });

  it("shows the empty note when there are no posts", () => {
    const empty = loadFixture<ContentResponse>("content_4.json");
    const view4 = buildContentView(empty, { ...report, recommendations: [] });
    renderContent(root, view4, [], () => {});
    expect(root.querySelector(".empty-note")).not.toBeNull();
    expect(root.querySelectorAll(".post-card")).toHaveLength(0);
  });
});

describe("renderAttributes", () => {
  const view = buildAttributeView(report);

  it("renders one row per attribute in descending risk order", () => {
    renderAttributes(root, view, [], () => {});
    const rows = Array.from(root.querySelectorAll(".attribute-row"));
    expect(rows.map((r) => r.getAttribute("data-attribute"))).toEqual(
      view.rows.map((r) => r.name),
    );
    rows.forEach((row, i) => {
      expect(row.querySelector(".risk-term")?.textContent).toBe(
        score(view.rows[i].riskTerm),
      );
    });
  });

  it("stages an attribute change on click", () => {
    const staged: SettingChange[] = [];
    renderAttributes(root, view, [], (c) => staged.push(c));
    const target = view.rows.find((r) => r.options.length > 0)!;
    const row = root.querySelector(`[data-attribute="${target.name}"]`)!;
    row.querySelector<HTMLButtonElement>(".option-button")!.click();
    expect(staged).toEqual([
      { kind: "attribute", item: target.name, setting: target.options[0].setting },
    ]);
  });

  it("marks the staged option", () => {
    const target = view.rows.find((r) => r.options.length > 0)!;
    const pending: SettingChange[] = [
      { kind: "attribute", item: target.name, setting: target.options[0].setting },
    ];
    renderAttributes(root, view, pending, () => {});
    const row = root.querySelector(`[data-attribute="${target.name}"]`)!;
    const buttons = Array.from(
      row.querySelectorAll<HTMLButtonElement>(".option-button"),
    );
    expect(buttons[0].classList.contains("staged")).toBe(true);
    for (const later of buttons.slice(1)) {
      expect(later.classList.contains("staged")).toBe(false);
    }
  });
});

describe("renderOverview", () => {
  it("shows each composite score exactly as reported", () => {
    renderOverview(root, buildOverview(report, summary));
    const values = Array.from(root.querySelectorAll(".gauge-value"));
    expect(values.map((v) => v.textContent)).toEqual(
      Object.keys(report.cprs).map((name) => score(report.cprs[name])),
    );
  });

  it("renders the three component rows", () => {
    renderOverview(root, buildOverview(report, summary));
    const rows = Array.from(root.querySelectorAll("tr.component"));
    expect(rows).toHaveLength(3);
  });
});

describe("renderGraph", () => {
  it("draws a circle per node and a line per edge", () => {
    const view = buildGraphView(neighbors, 760, 480);
    renderGraph(root, view, 760, 480, () => {});
    expect(root.querySelectorAll("circle")).toHaveLength(neighbors.nodes.length);
    expect(root.querySelectorAll("line")).toHaveLength(neighbors.edges.length);
  });

  it("reports the clicked node id", () => {
    const view = buildGraphView(neighbors, 760, 480);
    const clicked: number[] = [];
    renderGraph(root, view, 760, 480, (id) => clicked.push(id));
    const other = view.nodes.find((n) => !n.isCenter)!;
    const circle = root.querySelector<SVGElement>(
      `circle[data-id="${other.id}"]`,
    )!;
    circle.dispatchEvent(new CustomEvent("click"));
    expect(clicked).toEqual([other.id]);
  });
});

describe("renderWhatIfPanel", () => {
  const pending: SettingChange[] = [
    { kind: "attribute", item: "Email", setting: "only_me" },
  ];

  it("stays hidden with nothing staged and no preview", () => {
    renderWhatIfPanel(root, [], null, () => {}, () => {}, () => {});
    expect(root.hidden).toBe(true);
    expect(root.children).toHaveLength(0);
  });

  it("lists staged changes and wires the action buttons", () => {
    let previews = 0;
    let reverts = 0;
    const removed: [string, string][] = [];
    renderWhatIfPanel(
      root,
      pending,
      null,
      () => previews++,
      () => reverts++,
      (kind, item) => removed.push([kind, item]),
    );
    expect(root.hidden).toBe(false);
    expect(root.querySelectorAll(".pending-item")).toHaveLength(1);
    root.querySelector<HTMLButtonElement>(".preview-button")!.click();
    root.querySelector<HTMLButtonElement>(".revert-button")!.click();
    root.querySelector<HTMLButtonElement>(".remove-button")!.click();
    expect(previews).toBe(1);
    expect(reverts).toBe(1);
    expect(removed).toEqual([["attribute", "Email"]]);
  });

  it("renders before, after and delta columns from the preview", () => {
    const view = buildWhatIfView(whatif);
    renderWhatIfPanel(root, pending, view, () => {}, () => {}, () => {});
    const rows = Array.from(root.querySelectorAll(".whatif-row"));
    expect(rows).toHaveLength(view.components.length + view.scenarios.length);
    const all = [...view.components, ...view.scenarios];
    rows.forEach((row, i) => {
      const cells = Array.from(row.querySelectorAll("td")).map(
        (c) => c.textContent,
      );
      expect(cells[1]).toBe(score(all[i].before));
      expect(cells[2]).toBe(score(all[i].after));
    });
    expect(root.querySelector(".approx-note")).not.toBeNull();
  });

  it("marks improvements and regressions on the delta cells", () => {
    const view = buildWhatIfView(whatif);
    renderWhatIfPanel(root, pending, view, () => {}, () => {}, () => {});
    for (const row of view.components) {
      if (row.delta === 0) continue;
      const cls = row.delta < 0 ? "improved" : "worsened";
      const cell = root.querySelector(`.whatif-${row.name} .delta`);
      expect(cell?.classList.contains(cls)).toBe(true);
    }
  });
});

describe("renderError", () => {
  it("toggles visibility with the message", () => {
    renderError(root, "scoring service unreachable");
    expect(root.hidden).toBe(false);
    expect(root.textContent).toBe("scoring service unreachable");
    renderError(root, null);
    expect(root.hidden).toBe(true);
    expect(root.textContent).toBe("");
  });
});
