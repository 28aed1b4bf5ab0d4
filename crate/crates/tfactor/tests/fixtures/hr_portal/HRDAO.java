package hr.portal.dao;

public class HRDAO extends BaseDAO {
    private int openPositionCount;

    public <P> P getOpenPositions(P filter) {
        return filter;
    }

    public void addPosition(String title, String grade) {
        openPositionCount = openPositionCount + 1;
    }

    public void closePosition(long positionId) {
        openPositionCount = openPositionCount - 1;
    }
}
