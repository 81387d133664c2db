from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from app.routes import analysis_router
from app.config import settings
import uvicorn
import logging

# Configure logging
logging.basicConfig(level=settings.LOG_LEVEL)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="hochster-lc",
    description="Multigraded local cohomology of monomial ideals, generalized CM and k-Buchsbaum decisions",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["*"],
)

app.include_router(analysis_router, prefix="/api/analysis")

@app.get("/")
async def root():
    return {"message": "hochster-lc API", "version": "1.0.0"}

@app.get("/health")
async def health_check():
    return {"status": "healthy", "service": "hochster-lc"}

if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.DEBUG
    )
