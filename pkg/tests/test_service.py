import json
import threading

import pytest
import requests

from scenes import classroom_camera, four_speaker_scene

from tabletalk.geometry import annotation_to_jsonable
from tabletalk.service.cli import main as cli_main
from tabletalk.service.http import make_server


@pytest.fixture()
def service(tmp_path):
    frames = tmp_path / "frames"
    frames.mkdir()
    # tiny valid PNG (1x1 transparent pixel)
    png = bytes.fromhex(
        "89504e470d0a1a0a0000000d4948445200000001000000010806000000"
        "1f15c4890000000d49444154789c6360000000020001e221bc330000000049454e44ae426082"
    )
    (frames / "frame_0001.png").write_bytes(png)
    (frames / "frame_0002.png").write_bytes(png)

    server = make_server(port=0, frames_dir=frames,
                         annotations_dir=tmp_path / "annotations")
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    yield base, tmp_path
    server.shutdown()


def annotation_doc():
    scene = four_speaker_scene()
    return annotation_to_jsonable(scene.annotate(classroom_camera()))


class TestEndpoints:
    def test_healthz(self, service):
        base, _ = service
        response = requests.get(f"{base}/healthz")
        assert response.status_code == 200
        assert response.text == "ok"

    def test_frames_listing_and_bytes(self, service):
        base, _ = service
        frames = requests.get(f"{base}/api/frames").json()
        assert [f["frame_id"] for f in frames] == ["frame_0001", "frame_0002"]
        image = requests.get(f"{base}/api/frames/frame_0001")
        assert image.status_code == 200
        assert image.headers["Content-Type"] == "image/png"
        assert image.content.startswith(b"\x89PNG")

    def test_unknown_frame_404(self, service):
        base, _ = service
        response = requests.get(f"{base}/api/frames/missing")
        assert response.status_code == 404

    def test_estimate_matches_cli_byte_for_byte(self, service):
        base, tmp_path = service
        doc = annotation_doc()
        ann_path = tmp_path / "annotation.json"
        ann_path.write_text(json.dumps(doc))
        out_path = tmp_path / "geometry.json"
        assert cli_main(["estimate", str(ann_path), "--out", str(out_path)]) == 0

        response = requests.post(f"{base}/api/estimate", json=doc)
        assert response.status_code == 200
        payload = response.json()
        service_bytes = json.dumps(payload["geometry"], sort_keys=True,
                                   indent=2) + "\n"
        assert service_bytes == out_path.read_text()
        assert "keyboard_line" in payload["diagnostics"]["lines"]

    def test_estimate_missing_points_code(self, service):
        base, _ = service
        doc = annotation_doc()
        doc["points"] = [p for p in doc["points"]
                         if p["label"] != "table_corner_1"]
        response = requests.post(f"{base}/api/estimate", json=doc)
        assert response.status_code == 400
        body = response.json()
        assert body["code"] == "MissingPoints"
        assert "table_corner_1" in body["message"]

    def test_estimate_rejects_bad_json(self, service):
        base, _ = service
        response = requests.post(f"{base}/api/estimate", data=b"{nope",
                                 headers={"Content-Type": "application/json"})
        assert response.status_code == 400
        assert response.json()["code"] == "InvalidJson"

    def test_annotation_persistence_last_write_wins(self, service):
        base, tmp_path = service
        doc = annotation_doc()
        doc["frame_id"] = "frame_0001"
        assert requests.post(f"{base}/api/annotations", json=doc).status_code == 200
        saved = tmp_path / "annotations" / "frame_0001.json"
        assert saved.exists()
        first = saved.read_text()

        doc["keyboard_width_in"] = 18.0
        assert requests.post(f"{base}/api/annotations", json=doc).status_code == 200
        second = saved.read_text()
        assert first != second
        assert json.loads(second)["keyboard_width_in"] == 18.0

    def test_annotation_rejects_path_traversal(self, service):
        base, _ = service
        doc = {"frame_id": "../evil"}
        response = requests.post(f"{base}/api/annotations", json=doc)
        assert response.status_code == 400

    def test_near_parallel_grid_names_line_pair(self, service):
        # keyboard rotated to run along the depth edges: the grid refuses
        # to extrapolate and the error names the offending pair
        base, _ = service
        doc = annotation_doc()
        points = {p["label"]: p for p in doc["points"]}
        c1, c2 = points["table_corner_1"], points["table_corner_2"]
        # image-space direction of the left depth edge
        dx, dy = c2["x"] - c1["x"], c2["y"] - c1["y"]
        for label, (shift, along) in {
            "keyboard_5": (60.0, 0.30),
            "keyboard_6": (63.0, 0.32),
            "keyboard_7": (63.0, 0.62),
            "keyboard_8": (60.0, 0.60),
        }.items():
            points[label]["x"] = c1["x"] + shift + along * dx
            points[label]["y"] = c1["y"] + along * dy
        response = requests.post(f"{base}/api/estimate", json=doc)
        assert response.status_code == 400
        body = response.json()
        assert body["code"] == "NearParallelLines"
        assert "keyboard line" in body["message"]
