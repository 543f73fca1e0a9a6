"""
Exercising the HTTP API without opening a port
==============================================

The service is a plain FastAPI app, so an in-process test client can
drive every endpoint exactly as the browser UI would. For a real
server, train a checkpoint and run `huecast serve`.
"""
from fastapi.testclient import TestClient

from huecast.dataset import load_default_chart
from huecast.pipeline import train_pipeline
from huecast.service import create_app

data = load_default_chart()
pipe, _, _ = train_pipeline(data, hidden_dims=(32, 16), epochs=200)
client = TestClient(create_app(pipe, data))

# the inference endpoint: description in, recipe plus context out
resp = client.post("/api/infer", json={"description": "very light grey"})
doc = resp.json()
print(f"POST /api/infer -> {resp.status_code}")
print(f"  rgb={doc['rgb']} hex={doc['hex']} tokens={doc['tokens']}")
for entry in doc["nearest"]:
    print(f"  nearest: {entry['name']:<20} {entry['hex']}  dE={entry['delta_e']}")

# malformed requests get a JSON error with status 400
bad = client.post("/api/infer", json={"description": ""})
print(f"\nempty description -> {bad.status_code} {bad.json()}")

# pairwise distances, used by the UI's pin board
resp = client.post(
    "/api/delta-e",
    json={"pairs": [[[255, 0, 0], [254, 0, 0]], [[255, 0, 0], [0, 0, 255]]]},
)
print(f"\nPOST /api/delta-e -> {resp.json()}")

# model card
print(f"\nGET /api/model -> {client.get('/api/model').json()}")
print(f"GET /api/health -> {client.get('/api/health').json()}")
