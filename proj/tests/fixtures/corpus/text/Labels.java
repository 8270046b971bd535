class Labels {
    String dayName(int day) {
        String name;
        switch (day) {
            case 0:
                name = "Sunday";
                break;
            case 6:
                name = "Saturday";
                break;
            default:
                name = "Weekday";
                break;
        }
        return name;
    }

    int priority(String level) {
        switch (level) {
            case "high":
                return 3;
            case "medium":
                return 2;
            case "low":
                return 1;
            default:
                return 0;
        }
    }

    String repeat(String text, int times) {
        String out = "";
        boolean done = times <= 0;
        int copies = 0;
        while (!done) {
            out = out + text;
            copies++;
            done = copies >= times || copies > 50;
        }
        return out;
    }
}
